#include "graham/sequence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "graham/error.hpp"

namespace graham {

Int MProductSequence::total_length() const {
  Int total = 0;
  for (const auto& [value, count] : terms) total += count;
  return total;
}

Int MProductSequence::multiplicity_of(Int value) const {
  for (const auto& [v, count] : terms) {
    if (v == value) return count;
  }
  return 0;
}

MProductSequence make_sequence(Int modulus, std::vector<std::pair<Int, Int>> terms) {
  if (modulus < 2) throw DomainError("sequence modulus must be >= 2");
  MProductSequence seq;
  seq.modulus = modulus;
  seq.terms = std::move(terms);
  return seq;
}

MProductSequence reduce_sequence(Int modulus, std::vector<std::pair<Int, Int>> terms) {
  if (modulus < 2) throw DomainError("sequence modulus must be >= 2");
  std::map<Int, Int> merged;
  for (const auto& [value, count] : terms) merged[value] += count;
  MProductSequence seq;
  seq.modulus = modulus;
  for (const auto& [value, count] : merged) {
    Int reduced = ((count % modulus) + modulus) % modulus;
    if (reduced != 0) seq.terms.emplace_back(value, reduced);
  }
  return seq;
}

namespace {

bool is_zero_singleton(const MProductSequence& seq) {
  return seq.terms.size() == 1 && seq.terms.front().first == 0;
}

}  // namespace

std::optional<ViolationReport> validate(const MProductSequence& seq) {
  const Int m = seq.modulus;
  if (seq.empty()) {
    return ViolationReport{SequenceViolation::UnsortedTerms, "sequence is empty"};
  }
  if (is_zero_singleton(seq)) {
    // 0^k is an m-th power for any k; only the multiplicity bound applies.
    Int count = seq.terms.front().second;
    if (count < 1 || count > m - 1) {
      return ViolationReport{SequenceViolation::MultiplicityExceeded,
                             "zero sequence multiplicity out of [1, m-1]"};
    }
    return std::nullopt;
  }
  Int prev = 0;
  for (const auto& [value, count] : seq.terms) {
    if (value <= prev) {
      return ViolationReport{SequenceViolation::UnsortedTerms,
                             "values must be positive and strictly increasing"};
    }
    prev = value;
  }
  for (const auto& [value, count] : seq.terms) {
    if (count < 1 || count > m - 1) {
      return ViolationReport{SequenceViolation::MultiplicityExceeded,
                             std::to_string(value) + " appears " + std::to_string(count) +
                                 " times; allowed range is [1, " + std::to_string(m - 1) + "]"};
    }
  }
  std::map<Int, Int> exponent_sum;
  for (const auto& [value, count] : seq.terms) {
    for (const auto& [p, e] : factorize(value).factors) {
      exponent_sum[p] = (exponent_sum[p] + (e % m) * count) % m;
    }
  }
  for (const auto& [p, e] : exponent_sum) {
    if (e != 0) {
      return ViolationReport{SequenceViolation::NotMthPower,
                             "exponent of prime " + std::to_string(p) +
                                 " is " + std::to_string(e) + " mod " + std::to_string(m)};
    }
  }
  return std::nullopt;
}

namespace {

void check_combine_preconditions(const MProductSequence& a, const MProductSequence& b) {
  if (a.modulus != b.modulus)
    throw PreconditionViolated("combine: moduli differ");
  if (a.empty() || b.empty())
    throw PreconditionViolated("combine: empty sequence");
  if (is_zero_singleton(a) || is_zero_singleton(b))
    throw PreconditionViolated("combine: zero sequence cannot be combined");
  if (!(a.min_value() < b.min_value()))
    throw PreconditionViolated("combine: min(A) must be strictly below min(B)");
  if (a.max_value() != b.max_value())
    throw PreconditionViolated("combine: sequences must share their maximum");
}

}  // namespace

MProductSequence combine(const MProductSequence& a, const MProductSequence& b) {
  return combine_power(a, b, 1);
}

MProductSequence combine_power(const MProductSequence& a, const MProductSequence& b, Int k) {
  if (k < 1) throw PreconditionViolated("combine_power: k must be >= 1");
  check_combine_preconditions(a, b);
  const Int m = a.modulus;
  std::vector<std::pair<Int, Int>> pool(a.terms);
  for (const auto& [value, count] : b.terms) {
    pool.emplace_back(value, (count * (k % m)) % m);
  }
  return reduce_sequence(m, std::move(pool));
}

MProductSequence strip_mth_powers(const MProductSequence& seq) {
  if (seq.empty() || is_zero_singleton(seq))
    throw PreconditionViolated("strip_mth_powers: empty or zero sequence");
  const Int m = seq.modulus;
  if (is_perfect_mth_power(seq.min_value(), m))
    throw PreconditionViolated("strip_mth_powers: minimum is an m-th power");
  MProductSequence out;
  out.modulus = m;
  for (const auto& term : seq.terms) {
    if (!is_perfect_mth_power(term.first, m)) out.terms.push_back(term);
  }
  return out;
}

std::string render(const MProductSequence& seq) {
  if (seq.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (const auto& [value, count] : seq.terms) {
    if (!first) os << "·";
    first = false;
    os << value;
    if (count > 1) os << "^{" << count << "}";
  }
  return os.str();
}

MProductSequence parse_sequence(const std::string& text, Int modulus) {
  std::vector<std::pair<Int, Int>> terms;
  std::string token;
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 2, "·") == 0) {
      tokens.push_back(token);
      token.clear();
      i += 2;
    } else if (text[i] == '*' || text[i] == 'x') {
      tokens.push_back(token);
      token.clear();
      ++i;
    } else {
      token += text[i];
      ++i;
    }
  }
  tokens.push_back(token);

  int line = 1;
  for (const std::string& t : tokens) {
    std::string s;
    for (char c : t) {
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw MalformedLine(line, "empty term in sequence");
    Int value = 0, count = 1;
    std::size_t caret = s.find('^');
    try {
      if (caret == std::string::npos) {
        value = std::stoll(s);
      } else {
        value = std::stoll(s.substr(0, caret));
        std::string exp = s.substr(caret + 1);
        if (!exp.empty() && exp.front() == '{' && exp.back() == '}')
          exp = exp.substr(1, exp.size() - 2);
        count = std::stoll(exp);
      }
    } catch (const std::exception&) {
      throw MalformedLine(line, "cannot parse sequence term '" + s + "'");
    }
    terms.emplace_back(value, count);
  }
  return make_sequence(modulus, std::move(terms));
}

}  // namespace graham
