#pragma once

// shared test fixtures: the running example fans and configurations

#include "toric/fan.hpp"

namespace fixtures {

using namespace toric;

inline Vec<Rat> rv(std::initializer_list<int> xs) {
    Vec<Rat> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

inline Cone<Rat> mk(std::size_t dim, std::initializer_list<std::initializer_list<int>> gens) {
    std::vector<Vec<Rat>> g;
    for (auto l : gens) g.push_back(rv(l));
    return Cone<Rat>::from_generators(dim, g);
}

/// complete fan with rays e1, e2, -e1-e2 (7 cones)
inline Fan<Rat> fan_sigma2() {
    return validate_fan<Rat>(2, {mk(2, {{1, 0}, {0, 1}}), mk(2, {{0, 1}, {-1, -1}}),
                                 mk(2, {{1, 0}, {-1, -1}})});
}

/// the four quadrants (9 cones)
inline Fan<Rat> fan_sigma3() {
    return validate_fan<Rat>(2, {mk(2, {{1, 0}, {0, 1}}), mk(2, {{-1, 0}, {0, 1}}),
                                 mk(2, {{-1, 0}, {0, -1}}), mk(2, {{1, 0}, {0, -1}})});
}

/// incomplete fan: cone{e1,e2} and cone{e1, 2e1-e2}
inline Fan<Rat> fan_sigma1() {
    return validate_fan<Rat>(2, {mk(2, {{1, 0}, {0, 1}}), mk(2, {{1, 0}, {2, -1}})});
}

/// complete fan with the slanted ray (-1, r) (9 cones)
inline Fan<Rat> fan_hirzebruch(int r) {
    return validate_fan<Rat>(
        2, {mk(2, {{1, 0}, {0, 1}}), mk(2, {{1, 0}, {0, -1}}),
            Cone<Rat>::from_generators(2, {rv({-1, r}), rv({0, -1})}),
            Cone<Rat>::from_generators(2, {rv({-1, r}), rv({0, 1})})});
}

}  // namespace fixtures
