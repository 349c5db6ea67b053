#include "qcff/poly_io.hpp"

#include <cctype>
#include <charconv>

#include "qcff/error.hpp"

namespace qcff {

std::string format_poly(const Poly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i].enc);
      continue;
    }
    if (!c[i].is_one()) {
      out += std::to_string(c[i].enc);
      out += '*';
    }
    out += var;
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw Error(Errc::ParseError, "bad integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Poly parse_poly(const FieldCtx& ctx, std::string_view text, char var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");

  std::vector<Fq> coeffs;
  std::string_view rest{s};
  while (true) {
    const auto plus = rest.find('+');
    const std::string_view term = rest.substr(0, plus);
    if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + s + "'");

    std::uint64_t c = 1;
    std::uint64_t k = 0;
    const auto vpos = term.find(var);
    if (vpos == std::string_view::npos) {
      c = parse_uint(term, s);
    } else {
      if (vpos > 0) {
        if (term[vpos - 1] != '*' || vpos < 2) {
          throw Error(Errc::ParseError, "expected 'c*" + std::string(1, var) + "' in '" + s + "'");
        }
        c = parse_uint(term.substr(0, vpos - 1), s);
      }
      const std::string_view tail = term.substr(vpos + 1);
      if (tail.empty()) {
        k = 1;
      } else if (tail[0] == '^') {
        k = parse_uint(tail.substr(1), s);
      } else {
        throw Error(Errc::ParseError, "unexpected '" + std::string(tail) + "' in '" + s + "'");
      }
    }
    if (c >= ctx.q()) {
      throw Error(Errc::ParseError, "coefficient " + std::to_string(c) + " is not below q = " +
                                        std::to_string(ctx.q()));
    }
    if (k > 1'000'000) throw Error(Errc::ParseError, "exponent too large in '" + s + "'");
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = ctx.add(coeffs[k], Fq{static_cast<std::uint32_t>(c)});

    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return Poly(std::move(coeffs));
}

std::vector<std::uint32_t> to_coeff_array(const Poly& f) {
  std::vector<std::uint32_t> out;
  out.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) out.push_back(c.enc);
  return out;
}

Poly from_coeff_array(const FieldCtx& ctx, const std::vector<std::int64_t>& coeffs) {
  std::vector<Fq> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) {
    if (c < 0) throw Error(Errc::BadElement, "negative coefficient encoding");
    v.push_back(ctx.element(static_cast<std::uint64_t>(c)));
  }
  return Poly(std::move(v));
}

}  // namespace qcff
