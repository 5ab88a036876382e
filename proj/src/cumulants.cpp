#include "freemeixner/cumulants.hpp"

#include <cctype>

namespace freemeixner {

Word parse_word(std::string_view text) {
    Word w;
    for (char c : text) {
        switch (std::toupper(static_cast<unsigned char>(c))) {
            case 'X': w.push_back(Symbol::X); break;
            case 'Y': w.push_back(Symbol::Y); break;
            case 'S': w.push_back(Symbol::S); break;
            case ',':
            case ' ': break;
            default: throw DomainError("word symbols must be X, Y or S (got '" + std::string(1, c) + "')");
        }
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    for (Symbol s : w) out.push_back(static_cast<char>(s));
    return out;
}

}  // namespace freemeixner
