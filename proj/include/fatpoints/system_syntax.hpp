#pragma once

// Text form of plane systems: L<d>(<spec>,...) with spec one of
// m, m^k, [a,b], [a,b]^k. Whitespace is ignored; "L_<d>" is also accepted.

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"

namespace fatpoints {

namespace detail {

class SystemParser {
public:
   explicit SystemParser(std::string_view text)
   {
      for (std::size_t i = 0; i < text.size(); ++i) {
         if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            chars_.push_back(text[i]);
            offsets_.push_back(i);
         }
      }
      end_offset_ = text.size();
   }

   PlaneSystem parse()
   {
      expect('L');
      accept('_');
      Integer degree = integer("degree");
      std::vector<PointSpec> points;
      if (at_end()) return PlaneSystem(std::move(degree), {});
      expect('(');
      if (!accept(')')) {
         do {
            points.push_back(spec());
         } while (accept(','));
         expect(')');
      }
      if (!at_end()) fail("trailing characters");
      return PlaneSystem(std::move(degree), std::move(points));
   }

private:
   PointSpec spec()
   {
      PointSpec::Kind kind = FreePoint{0};
      if (accept('[')) {
         Integer a = integer("multiplicity");
         expect(',');
         Integer b = integer("multiplicity");
         expect(']');
         kind = InfNearPair{std::move(a), std::move(b)};
      } else {
         kind = FreePoint{integer("multiplicity")};
      }
      std::size_t count = 1;
      if (accept('^')) {
         const std::size_t where = pos_;
         const Integer k = integer("count");
         if (k < 1) fail_at(where, "count must be positive");
         if (k > Integer(1'000'000)) fail_at(where, "count too large");
         count = static_cast<std::size_t>(k);
      }
      return PointSpec(std::move(kind), count);
   }

   Integer integer(const char* what)
   {
      const std::size_t start = pos_;
      bool negative = false;
      if (accept('-')) negative = true;
      else accept('+');
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) digits.push_back(chars_[pos_++]);
      if (digits.empty()) fail_at(start, std::string("expected ") + what);
      Integer value(digits);
      return negative ? Integer(-value) : value;
   }

   bool at_end() const { return pos_ >= chars_.size(); }

   bool accept(char c)
   {
      if (!at_end() && chars_[pos_] == c) {
         ++pos_;
         return true;
      }
      return false;
   }

   void expect(char c)
   {
      if (!accept(c)) fail(std::string("expected '") + c + "'");
   }

   [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

   [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const
   {
      throw ParseError(message, pos < offsets_.size() ? offsets_[pos] : end_offset_);
   }

   std::vector<char> chars_;
   std::vector<std::size_t> offsets_;
   std::size_t end_offset_ = 0;
   std::size_t pos_ = 0;
};

}  // namespace detail

inline PlaneSystem parse_system(std::string_view text) { return detail::SystemParser(text).parse(); }

inline std::string format_spec(const PointSpec& p)
{
   std::ostringstream out;
   if (const auto* f = std::get_if<FreePoint>(&p.kind())) {
      out << f->mult;
   } else {
      const auto& pr = std::get<InfNearPair>(p.kind());
      out << '[' << pr.a << ',' << pr.b << ']';
   }
   if (p.count() > 1) out << '^' << p.count();
   return out.str();
}

/// Inverse of parse_system; prints specs as stored.
inline std::string format_system(const PlaneSystem& s)
{
   std::string out = "L" + s.degree().str() + "(";
   for (std::size_t i = 0; i < s.points().size(); ++i) {
      if (i) out += ',';
      out += format_spec(s.points()[i]);
   }
   return out + ")";
}

/// Merges adjacent identical specs: L2(1,1,1) -> L2(1^3).
inline PlaneSystem normalized(const PlaneSystem& s)
{
   std::vector<PointSpec> merged;
   for (const auto& p : s.points()) {
      if (!merged.empty() && merged.back().kind() == p.kind())
         merged.back() = PointSpec(p.kind(), merged.back().count() + p.count());
      else
         merged.push_back(p);
   }
   return PlaneSystem(s.degree(), std::move(merged));
}

/// Reads an expanded class back as a system of free points, merged.
inline PlaneSystem system_from_class(const LatticeClass& c)
{
   std::vector<PointSpec> points;
   for (const auto& m : c.mults()) points.push_back(PointSpec::free(m));
   return normalized(PlaneSystem(c.degree(), std::move(points)));
}

}  // namespace fatpoints
