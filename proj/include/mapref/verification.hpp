#pragma once

#include <array>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

namespace mapref {

namespace detail {

template <class T>
std::string display(const T& v);
template <class T>
std::string display(const std::vector<T>& v);
template <class T, std::size_t N>
std::string display(const std::array<T, N>& v);

inline std::string display(bool v) { return v ? "true" : "false"; }
inline std::string display(const std::string& v) { return v; }
inline std::string display(const char* v) { return v; }

template <class Seq>
std::string display_seq(const Seq& seq) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : seq) {
    if (!first) out += ',';
    first = false;
    out += display(x);
  }
  return out + "]";
}

template <class T>
std::string display(const std::vector<T>& v) {
  return display_seq(v);
}

template <class T, std::size_t N>
std::string display(const std::array<T, N>& v) {
  return display_seq(v);
}

template <class T>
std::string display(const T& v) {
  if constexpr (std::is_arithmetic_v<T>) {
    return std::to_string(v);
  } else {
    std::ostringstream out;
    out << v;
    return out.str();
  }
}

}  // namespace detail

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

/// Named assertions gathered while building or analysing a map.
class VerificationRecord {
 public:
  explicit VerificationRecord(std::string subject = {}) : subject_(std::move(subject)) {}

  template <class A, class B>
  bool expect_eq(std::string name, const A& expected, const B& actual) {
    bool ok;
    if constexpr (std::is_arithmetic_v<A> && std::is_arithmetic_v<B>) {
      ok = static_cast<long double>(expected) == static_cast<long double>(actual);
    } else {
      ok = expected == actual;
    }
    checks_.push_back({std::move(name), detail::display(expected), detail::display(actual), ok});
    return ok;
  }

  bool expect(std::string name, bool condition, std::string actual = {}) {
    checks_.push_back({std::move(name), "true", actual.empty() ? detail::display(condition) : actual,
                       condition});
    return condition;
  }

  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  /// Appends the other record's checks with their names prefixed.
  void merge(const VerificationRecord& other, const std::string& prefix = {});

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool all_passed() const;
  std::size_t failures() const;

  nlohmann::ordered_json to_json() const;
  /// One "PASS|FAIL name: expected=.. actual=.." line per check.
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
  std::vector<std::string> warnings_;
};

}  // namespace mapref
