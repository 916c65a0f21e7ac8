/*
   Copyright 2026 The mwl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MWL_DIVISIBILITY_HPP
#define MWL_DIVISIBILITY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwl/heights.hpp"

namespace mwl {

struct TorsionGenerator {
    std::string name;
    Section section;
    int order = 1;
};

// MW = sum Z b_i + sum Z/n_j tau_j
struct MWPresentation {
    std::vector<std::string> basis_names;
    std::vector<Section> basis;
    std::vector<TorsionGenerator> torsion;
    std::string lattice_label;
    RatMatrix gram;
    // every torsion element with its exponent vector
    std::vector<std::pair<std::vector<long>, Section>> torsion_elements;
};

MWPresentation make_presentation(const EllipticSurface& s, std::vector<std::string> names, std::vector<Section> basis,
                                 std::vector<TorsionGenerator> torsion, std::string label = "");

struct PresentationCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PresentationReport {
    bool ok = false;
    std::vector<PresentationCheck> checks;
    Rational det_gram;
    Rational predicted_det;  // |T|^2 / prod det(-A_v)
    Rational index_squared;  // det_gram / predicted_det
    int expected_rank = -1;
};

PresentationReport verify_presentation(const EllipticSurface& s, const MWPresentation& pres);

struct Coordinates {
    std::vector<Integer> free;
    std::vector<long> torsion;
};

Coordinates coordinates_of(const EllipticSurface& s, const MWPresentation& pres, const Section& p);
Section from_coordinates(const MWPresentation& pres, const Coordinates& c, const ModelPtr& m);
bool p_divisible(const EllipticSurface& s, const MWPresentation& pres, const Section& p, long prime);
// s0 with [p] s0 = p, if it exists in MW
std::optional<Section> divide_by(const EllipticSurface& s, const MWPresentation& pres, const Section& p, long prime);

struct CoverResult {
    long prime = 0;
    bool exists = false;
    std::vector<long> multipliers;          // lexicographically least, entries in [1, p-1]
    std::vector<std::vector<long>> matrix;  // coordinate matrix mod p, one column per section
    int kernel_dimension = 0;
    std::vector<std::vector<long>> kernel_basis;
    std::string trace;
};

// (a_1..a_r) in [1, p-1]^r with sum a_i C_i divisible by p in MW
CoverResult exists_cover_multipliers(const EllipticSurface& s, const MWPresentation& pres,
                                     const std::vector<Section>& cs, long prime);
// same search from precomputed coordinates
CoverResult cover_from_coordinates(const MWPresentation& pres, const std::vector<Coordinates>& coords, long prime);
// brute force over [1, p-1]^r on the coordinates
bool exhaustive_cover_search(const MWPresentation& pres, const std::vector<Coordinates>& coords, long prime);

struct OddPrimeAnalysis {
    bool default_exists = false;            // verdict for every odd prime not listed below
    std::map<long, bool> checked;           // explicitly decided primes
    std::vector<Integer> invariant_factors;
    std::vector<std::vector<Integer>> kernel_basis;  // rows indexed by sections
    std::string describe() const;
    bool exists_for(long p) const;
};

OddPrimeAnalysis all_odd_p_analysis(const EllipticSurface& s, const MWPresentation& pres,
                                    const std::vector<Section>& cs);
OddPrimeAnalysis odd_prime_analysis_from_coordinates(const MWPresentation& pres,
                                                     const std::vector<Coordinates>& coords);

// Smith normal form: U M V = diag(d_1, ..., d_k, 0, ...)
struct SmithForm {
    std::vector<Integer> invariants;  // nonzero d_i
    std::vector<std::vector<Integer>> V;
};
SmithForm smith_normal_form(const std::vector<std::vector<Integer>>& M, size_t cols);

bool is_prime(long n);

}  // namespace mwl

#endif
