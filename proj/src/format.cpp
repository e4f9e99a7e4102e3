#include "dtvol/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "dtvol/longitude.hpp"

namespace dtvol {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

bool is_flat(const ojson& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !std::all_of(e.begin(), e.end(), [](const ojson& x) { return x.is_primitive(); })))
      return false;
  return true;
}

void dump_into(std::string& out, const ojson& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case ojson::value_t::number_float:
      out += std::isfinite(j.get<double>()) ? format_number(j.get<double>()) : "null";
      return;
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, val] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += ojson(key).dump();
        out += pretty ? ": " : ":";
        dump_into(out, val, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case ojson::value_t::array: {
      const bool inline_array = !pretty || is_flat(j) || j.empty();
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += inline_array && pretty ? ", " : ",";
        first = false;
        if (!inline_array) newline(depth + 1);
        dump_into(out, e, inline_array ? -1 : indent, depth + 1);
      }
      if (!inline_array) newline(depth);
      out += ']';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const ojson& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

ojson complex_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InvalidArgument("cannot parse complex number '" + std::string(whole) + "' (expected re,im)");
  return v;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_real(text, text), 0.0};
  return {parse_real(text.substr(0, comma), text), parse_real(text.substr(comma + 1), text)};
}

ojson to_json(const SeedCandidate& c) {
  ojson j;
  j["z_seed"] = complex_json(c.z_seed);
  j["imcond"] = (c.imcond_seed);
  j["alpha_end"] = c.alpha_end ? ojson((*c.alpha_end)) : ojson(nullptr);
  j["volume_estimate"] = (c.volume_estimate);
  j["status"] = to_string(c.status);
  j["selected"] = c.selected;
  return j;
}

ojson to_json(const VolumeResult& r) {
  ojson j;
  j["k"] = r.knot.k;
  j["n"] = r.knot.n;
  j["alpha"] = (r.alpha);
  j["alpha_K"] = r.alpha_K ? ojson((*r.alpha_K)) : ojson(nullptr);
  j["volume"] = (r.volume);
  j["quad_error"] = (r.quad_error);
  j["candidates"] = ojson::array();
  for (const SeedCandidate& c : r.candidates) j["candidates"].push_back(to_json(c));
  j["regime_check_passed"] = r.regime_check_passed;
  j["diagnostics"] = r.diagnostics;
  return j;
}

std::string curve_csv(const std::vector<VolumeResult>& curve) {
  std::string out = "alpha,volume,quad_error\n";
  for (const VolumeResult& r : curve)
    out += format_number(r.alpha) + "," + format_number(r.volume) + "," + format_number(r.quad_error) + "\n";
  return out;
}

std::string branch_csv(const Branch& br) {
  std::string out = "omega,re_z,im_z,re_L,im_L,logabsL\n";
  for (const BranchPoint& p : br.points) {
    const cplx L = longitude_L(br.knot, p.z, p.M);
    out += format_number(p.omega) + "," + format_number(p.z.real()) + "," + format_number(p.z.imag()) + "," +
           format_number(L.real()) + "," + format_number(L.imag()) + "," + format_number(std::log(std::abs(L))) + "\n";
  }
  return out;
}

}  // namespace dtvol
