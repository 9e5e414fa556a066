#include "polychow/fixtures.hpp"

#include <stdexcept>

namespace polychow {

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

ZVec zv(std::initializer_list<long> xs) {
    ZVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

PolyhedralComplex fixture_p1(size_t r) {
    if (r == 0) throw std::invalid_argument("fixture p1: need at least one vertex");
    std::vector<Polyhedron> cells;
    cells.emplace_back(1, std::vector<QVec>{qv({0})}, std::vector<ZVec>{zv({-1})});
    for (size_t i = 0; i + 1 < r; ++i)
        cells.emplace_back(1, std::vector<QVec>{qv({long(i)}), qv({long(i) + 1})},
                           std::vector<ZVec>{});
    cells.emplace_back(1, std::vector<QVec>{qv({long(r) - 1})}, std::vector<ZVec>{zv({1})});
    return build_complex(1, cells);
}

PolyhedralComplex fixture_p1_half() {
    QVec half{rat(1, 2)};
    std::vector<Polyhedron> cells;
    cells.emplace_back(1, std::vector<QVec>{qv({0})}, std::vector<ZVec>{zv({-1})});
    cells.emplace_back(1, std::vector<QVec>{qv({0}), half}, std::vector<ZVec>{});
    cells.emplace_back(1, std::vector<QVec>{half, qv({1})}, std::vector<ZVec>{});
    cells.emplace_back(1, std::vector<QVec>{qv({1})}, std::vector<ZVec>{zv({1})});
    return build_complex(1, cells);
}

PolyhedralComplex fixture_p2_model() {
    QVec v1 = qv({0, 1}), v2 = qv({0, 0});
    std::vector<Polyhedron> cells;
    cells.emplace_back(2, std::vector<QVec>{v1, v2}, std::vector<ZVec>{zv({1, 0})});
    cells.emplace_back(2, std::vector<QVec>{v2}, std::vector<ZVec>{zv({1, 0}), zv({-1, -1})});
    cells.emplace_back(2, std::vector<QVec>{v1}, std::vector<ZVec>{zv({1, 0}), zv({0, 1})});
    cells.emplace_back(2, std::vector<QVec>{v1, v2}, std::vector<ZVec>{zv({-1, -1})});
    cells.emplace_back(2, std::vector<QVec>{v1}, std::vector<ZVec>{zv({0, 1}), zv({-1, -1})});
    return build_complex(2, cells);
}

PolyhedralComplex fixture_blp2_model() {
    QVec w1 = qv({0, 0}), w2 = qv({1, 0}), w3 = qv({1, 1});
    std::vector<Polyhedron> cells;
    cells.emplace_back(2, std::vector<QVec>{w1, w2, w3}, std::vector<ZVec>{});
    cells.emplace_back(2, std::vector<QVec>{w2, w3}, std::vector<ZVec>{zv({1, 0})});
    cells.emplace_back(2, std::vector<QVec>{w3}, std::vector<ZVec>{zv({1, 0}), zv({0, 1})});
    cells.emplace_back(2, std::vector<QVec>{w1, w3}, std::vector<ZVec>{zv({0, 1})});
    cells.emplace_back(2, std::vector<QVec>{w1}, std::vector<ZVec>{zv({0, 1}), zv({-1, -1})});
    cells.emplace_back(2, std::vector<QVec>{w1}, std::vector<ZVec>{zv({-1, -1}), zv({0, -1})});
    cells.emplace_back(2, std::vector<QVec>{w1, w2}, std::vector<ZVec>{zv({0, -1})});
    cells.emplace_back(2, std::vector<QVec>{w2}, std::vector<ZVec>{zv({0, -1}), zv({1, 0})});
    return build_complex(2, cells);
}

PolyhedralComplex fixture_projective(size_t n) {
    if (n == 0 || n > 6) throw std::invalid_argument("fixture projective: rank must be 1..6");
    std::vector<ZVec> rays;
    for (size_t i = 0; i < n; ++i) {
        ZVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(ZVec(n, Int(-1)));
    QVec origin(n, Rat(0));
    std::vector<Polyhedron> cells;
    for (size_t skip = 0; skip <= n; ++skip) {
        std::vector<ZVec> gens;
        for (size_t i = 0; i <= n; ++i)
            if (i != skip) gens.push_back(rays[i]);
        cells.emplace_back(n, std::vector<QVec>{origin}, gens);
    }
    return build_complex(n, cells);
}

PolyhedralComplex canonical_model(const PolyhedralComplex& c) { return recession_fan(c); }

PolyhedralComplex fixture(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    auto count_arg = [&](const char* what) -> size_t {
        size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(arg, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (arg.empty() || pos != arg.size())
            throw std::invalid_argument(std::string("fixture ") + head + ": expected " + what +
                                        ", got \"" + arg + "\"");
        return v;
    };
    if (head == "p1") return fixture_p1(count_arg("a vertex count"));
    if (head == "p1-half") return fixture_p1_half();
    if (head == "p2-model") return fixture_p2_model();
    if (head == "blp2-model") return fixture_blp2_model();
    if (head == "projective") return fixture_projective(count_arg("a rank"));
    if (head == "canonical") {
        if (arg == "p1" || arg == "p2" || arg == "p3")
            return fixture_projective(size_t(arg[1] - '0'));
        if (arg == "blp2") return canonical_model(fixture_blp2_model());
        throw std::invalid_argument("fixture canonical: unknown fan \"" + arg + "\"");
    }
    throw std::invalid_argument("unknown fixture \"" + name + "\"");
}

const std::vector<std::string>& fixture_name_patterns() {
    static const std::vector<std::string> names = {
        "p1:<r>", "p1-half", "p2-model", "blp2-model", "projective:<n>",
        "canonical:<p1|p2|p3|blp2>",
    };
    return names;
}

}  // namespace polychow
