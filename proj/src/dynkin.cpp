#include "isurf/dynkin.hpp"

#include <cctype>

namespace isurf {

std::string DynkinType::label() const {
    const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
    return f + std::to_string(rank);
}

bool DynkinType::valid() const {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::D: return rank >= 4;
        case Family::E: return rank >= 6 && rank <= 8;
    }
    return false;
}

DynkinType DynkinType::parse(const std::string& s) {
    if (s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1]))) throw InputError("bad Dynkin label: " + s);
    DynkinType t;
    switch (s[0]) {
        case 'A': t.family = Family::A; break;
        case 'D': t.family = Family::D; break;
        case 'E': t.family = Family::E; break;
        default: throw InputError("bad Dynkin label: " + s);
    }
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InputError("bad Dynkin label: " + s);
    t.rank = std::stoi(s.substr(1));
    if (!t.valid()) throw InputError("bad Dynkin label: " + s);
    return t;
}

std::vector<std::pair<int, int>> DynkinType::edges() const {
    std::vector<std::pair<int, int>> e;
    int n = rank;
    switch (family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n - 1; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(n - 3, n - 2);
            e.emplace_back(n - 3, n - 1);
            break;
        case Family::E:
            e.emplace_back(0, 2);
            e.emplace_back(1, 3);
            for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            break;
    }
    return e;
}

long DynkinType::root_count() const {
    long n = rank;
    switch (family) {
        case Family::A: return n * (n + 1);
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    }
    return 0;
}

long DynkinType::coxeter_number() const {
    long n = rank;
    switch (family) {
        case Family::A: return n + 1;
        case Family::D: return 2 * n - 2;
        case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    }
    return 0;
}

IntMatrix cartan_matrix(const DynkinType& t) {
    if (!t.valid()) throw PreconditionError("invalid Dynkin type");
    IntMatrix c(t.rank, t.rank);
    for (int i = 0; i < t.rank; ++i) c(i, i) = 2;
    for (auto [a, b] : t.edges()) c(a, b) = c(b, a) = -1;
    return c;
}

IntegralLattice root_lattice(const DynkinType& t) { return IntegralLattice(cartan_matrix(t).scaled(Int(-1))); }

std::vector<long> highest_root_formula(const DynkinType& t) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return std::vector<long>(n, 1);
        case Family::D: {
            std::vector<long> c(n, 2);
            c[0] = 1;
            c[n - 2] = c[n - 1] = 1;
            return c;
        }
        case Family::E:
            if (n == 6) return {1, 2, 2, 3, 2, 1};
            if (n == 7) return {2, 2, 3, 4, 3, 2, 1};
            return {2, 3, 4, 6, 5, 4, 3, 2};
    }
    return {};
}

}  // namespace isurf
