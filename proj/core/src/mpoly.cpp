#include "kmilnor/mpoly.hpp"

namespace kmil {

int var_index(const std::string& name)
{
    if (name == "x") return 0;
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '9') {
        if (name[0] == 'y') return name[1] - '0';
        if (name[0] == 'z') return 9 + (name[1] - '0');
    }
    fail(Errc::ParseError, "unknown variable '" + name + "'");
}

std::string var_name(int idx)
{
    if (idx == 0) return "x";
    if (idx >= 1 && idx <= 9) return "y" + std::to_string(idx);
    if (idx >= 10 && idx <= 18) return "z" + std::to_string(idx - 9);
    fail(Errc::InvalidInput, "bad variable slot");
}

} // namespace kmil
