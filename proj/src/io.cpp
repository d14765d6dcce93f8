#include <charconv>
#include "pathex/io.hpp"

#include <iomanip>
#include <sstream>

namespace pathex {

std::string to_string(const Rational& r) { return r.str(); }

namespace {

// Decimal only; boost reads a leading 0 as an octal prefix, so zeros are stripped.
boost::multiprecision::cpp_int parse_integer(std::string text, const std::string& whole) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::Parse, "invalid rational '" + whole + "'");
  const auto first = text.find_first_not_of('0');
  text = first == std::string::npos ? "0" : text.substr(first);
  boost::multiprecision::cpp_int value(text);
  return negative ? boost::multiprecision::cpp_int(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const auto num = parse_integer(text.substr(0, slash), text);
    const auto den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
    boost::multiprecision::cpp_int den = 1;
    for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
    return Rational(parse_integer(digits, text), den);
  }
  return Rational(parse_integer(text, text));
}

namespace {

template <class S, class Writer>
nlohmann::json measure_json(const EdgeMeasure<S>& mu, Writer write) {
  nlohmann::json entries = nlohmann::json::array();
  const int n = mu.order();
  Eigen::Index e = 0;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j, ++e)
      if (mu.weights()[e] > 0) entries.push_back({i, j, write(mu.weights()[e])});
  return {{"n", n}, {"entries", std::move(entries)}};
}

}  // namespace

nlohmann::json to_json(const EdgeMeasure<double>& mu) {
  return measure_json(mu, [](double w) { return nlohmann::json(w); });
}

nlohmann::json to_json(const EdgeMeasure<Rational>& mu) {
  return measure_json(mu, [](const Rational& w) { return nlohmann::json(to_string(w)); });
}

template <class S>
EdgeMeasure<S> measure_from_json(const nlohmann::json& j) {
  try {
    EdgeMeasure<S> mu(j.at("n").get<int>());
    for (const auto& entry : j.at("entries")) {
      if (!entry.is_array() || entry.size() != 3)
        throw Error(ErrorKind::Parse, "measure entry must be [i, j, weight]");
      const Vertex a = entry[0].get<int>();
      const Vertex b = entry[1].get<int>();
      S w;
      if (entry[2].is_string()) {
        const Rational r = parse_rational(entry[2].get<std::string>());
        if constexpr (is_exact_v<S>) w = r;
        else w = static_cast<S>(r);
      } else {
        w = S(entry[2].get<double>());
      }
      mu.set(a, b, w);
    }
    return mu;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("measure json: ") + ex.what());
  }
}

template EdgeMeasure<double> measure_from_json<double>(const nlohmann::json&);
template EdgeMeasure<Rational> measure_from_json<Rational>(const nlohmann::json&);

nlohmann::json to_json(const KKTReport& r) {
  return {{"lambda", r.lambda},
          {"max_violation", r.max_violation},
          {"max_inactive_excess", r.max_inactive_excess},
          {"support_size", r.support_size},
          {"stationary", r.stationary}};
}

nlohmann::json to_json(const OptimizeResult& r) {
  return {{"value", r.value},
          {"measure", to_json(r.measure)},
          {"kkt", to_json(r.kkt)},
          {"trace", {{"iterations", r.iterations},
                     {"best_restart", r.best_restart},
                     {"converged", r.converged},
                     {"restart_values", r.restart_values}}}};
}

nlohmann::json to_json(const OracleResult& r) {
  return {{"max_count", r.max_count}, {"witnesses", r.witnesses}, {"graphs_examined", r.graphs_examined}};
}

nlohmann::json to_json(const GapRow& row) {
  return {{"m", row.m}, {"n", row.n}, {"count", row.count}, {"target", row.target}, {"ratio", row.ratio}};
}

nlohmann::json pattern_to_json(const PatternSpec& pattern) {
  return std::visit(
      [](const auto& p) -> nlohmann::json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, PathPattern>) return {{"kind", "path"}, {"m", p.vertices}};
        else if constexpr (std::is_same_v<P, CyclePattern>) return {{"kind", "cycle"}, {"m", p.length}};
        else if constexpr (std::is_same_v<P, RhoPattern>) return {{"kind", "rho"}, {"m", p.m}};
        else return {{"kind", "anchored"}, {"s", p.s}, {"t", p.t}, {"a", p.a}, {"b", p.b}};
      },
      pattern);
}

PatternSpec pattern_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    PatternSpec out;
    if (kind == "path") out = PathPattern{j.at("m").get<int>()};
    else if (kind == "cycle") out = CyclePattern{j.at("m").get<int>()};
    else if (kind == "rho") out = RhoPattern{j.at("m").get<int>()};
    else if (kind == "anchored")
      out = AnchoredPairPattern{j.at("s").get<int>(), j.at("t").get<int>(), j.at("a").get<int>(),
                                j.at("b").get<int>()};
    else throw Error(ErrorKind::Parse, "unknown pattern kind '" + kind + "'");
    validate(out);
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("pattern json: ") + ex.what());
  }
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string gap_report_csv(const std::vector<GapRow>& rows) {
  std::ostringstream out;
  out << "m,n,count,target,ratio\n";
  for (const GapRow& r : rows)
    out << r.m << ',' << r.n << ',' << r.count << ',' << format_double(r.target) << ',' << format_double(r.ratio)
        << '\n';
  return out.str();
}

}  // namespace pathex
