#pragma once

#include <string>
#include <vector>

namespace abelcert {

// One machine-checked premise of a certificate. Serialized artifacts carry
// the full list; loading re-verifies every premise before trusting the file.
struct Condition {
  std::string name;
  std::string statement;
  bool verified = false;
};

inline Condition make_condition(std::string name, std::string statement, bool verified) {
  return Condition{std::move(name), std::move(statement), verified};
}

}  // namespace abelcert
