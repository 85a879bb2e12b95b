#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "planedraw/plane_graph.hpp"

namespace planedraw {

// Seeded generator with portable bounded draws. std::mt19937_64 has a
// standard-specified output sequence; uniform_int_distribution does not, so
// bounding is done here by rejection sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

// Inserts a new vertex inside the given triangular face, joined to its three
// corners. Works for the outer face too; the outer dart keeps naming the
// piece that contains it.
PlaneGraph stack_vertex(const PlaneGraph& g, const FaceWalk& face, VertexId new_id);

PlaneGraph gen_triangle();
PlaneGraph gen_k4();          // vertex 0 inside outer triangle {1,2,3}
PlaneGraph gen_octahedron();  // outer triangle {0,1,2}, inner {3,4,5}
PlaneGraph gen_cycle(int n);
PlaneGraph gen_star(int leaves);  // K_{1,m}, centre 0
PlaneGraph gen_wheel(int n);      // n vertices total, hub 0; n >= 4

// K4 with `depth` vertices stacked in a nested chain: the first into the
// smallest bounded face, each next into the smallest face containing the
// previously added vertex. Produces exactly `depth` separating triangles.
PlaneGraph gen_stacked(int depth);

// Repeated uniform (seeded) face stacking from a triangle; every output is a
// plane triangulation with 3n - 6 edges.
PlaneGraph gen_random_triangulation(int n, std::uint64_t seed);

struct GeneratorSpec {
    std::string family;  // triangle|k4|octahedron|cycle|star|wheel|stacked|random
    int n = 0;
    int depth = 0;
    std::uint64_t seed = 0;
};

PlaneGraph gen(const GeneratorSpec& spec);

}  // namespace planedraw
