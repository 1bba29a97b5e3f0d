#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nilcert {

struct BuiltinExample {
    std::string name;
    std::string summary;
    std::string document;  // JSON input document
};

const std::vector<BuiltinExample>& builtin_examples();
std::optional<BuiltinExample> find_builtin(const std::string& name);

}  // namespace nilcert
