#include "tropocat/rational.hpp"

#include "tropocat/error.hpp"

namespace tropocat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FootMismatch: return "FootMismatch";
    case ErrorCode::NegativeBetti: return "NegativeBetti";
    case ErrorCode::WrongMonoid: return "WrongMonoid";
    case ErrorCode::UnsupportedMonoid: return "UnsupportedMonoid";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyCut: return "EmptyCut";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::InvalidSimplex: return "InvalidSimplex";
    case ErrorCode::UnstableResidue: return "UnstableResidue";
    case ErrorCode::InconsistentDims: return "InconsistentDims";
    case ErrorCode::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
  }
  return "Unknown";
}

std::string to_pq_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-') {
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  }
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer q(std::string(den[0] == '+' ? den.substr(1) : den));
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace tropocat
