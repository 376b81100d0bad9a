// SPDX-License-Identifier: Apache-2.0
//
// rfso: performance analysis of mixed RF/FSO fixed-gain dual-hop relay links
// Copyright (C) 2026 The rfso authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rfso::specfun {

/// One instance of the Meijer G-function
///
///              m,n  [    | a_1..a_p ]
///             G     [ z  |          ]
///              p,q  [    | b_1..b_q ]
///
/// with the Mellin-Barnes kernel
///   prod_{j<=m} Γ(b_j - s) prod_{j<=n} Γ(1 - a_j + s)
///   ------------------------------------------------- z^s.
///   prod_{j>m} Γ(1 - b_j + s) prod_{j>n} Γ(a_j - s)
struct MeijerGSpec {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> a;
    std::vector<double> b;

    std::size_t p() const noexcept { return a.size(); }
    std::size_t q() const noexcept { return b.size(); }
};

/// Members of a set of leading bottom parameters that differ by integers.
/// The pole family of the cluster sits at base + k, k = 0, 1, ...; its
/// multiplicity at base + k is the number of members with offset <= k.
struct PoleCluster {
    double base = 0.0;
    std::vector<std::size_t> members; // indices into MeijerGSpec::b
    std::vector<int> offsets;         // integer offsets from base, same order

    std::size_t multiplicity() const noexcept { return members.size(); }
};

struct PoleStructure {
    std::vector<PoleCluster> groups;
    /// Smallest non-integer gap |d - round(d)| seen between two leading
    /// bottom parameters that were not clustered (1 when there is no pair).
    double min_noninteger_gap = 1.0;

    std::size_t max_multiplicity() const noexcept;
};

enum class GPath {
    residue,           // simple-pole series, all clusters singletons
    residue_log,       // at least one family used higher-order residues
    residue_perturbed, // coincident poles split by ±delta and averaged
    contour,           // vertical-line Mellin-Barnes quadrature
};

std::string to_string(GPath path);

enum class CoincidentPoleMethod {
    logarithmic, // exact higher-order residues
    perturb,     // shift by ±delta and average
};

struct MeijerGOptions {
    double pole_tol = 1e-9;       // exact-coincidence detection
    double near_tol = 1e-4;       // near-coincidence threshold
    double perturb_delta = 1e-6;
    CoincidentPoleMethod coincident = CoincidentPoleMethod::logarithmic;
    double rel_tol = 1e-15;       // per-term truncation test
    std::size_t max_terms = 10000; // per pole family
    /// Residue sums losing more than this factor to cancellation are
    /// re-evaluated on the contour when the contour exists.
    double cancellation_limit = 1e4;
    bool allow_contour = true;
};

struct GResult {
    double value = 0.0;
    double error = 0.0;      // absolute error estimate
    std::size_t terms = 0;   // series terms or quadrature nodes
    GPath path = GPath::residue;
};

/// Throws InvalidInput if sizes, orders or the definability condition fail.
void validate(const MeijerGSpec& spec, double pole_tol = 1e-9);

/// Removes parameter pairs whose gamma factors cancel exactly: a_i (i > n)
/// against b_j (j <= m), and a_i (i <= n) against b_j (j > m).
MeijerGSpec cancel_parameters(const MeijerGSpec& spec, double tol = 1e-12);

PoleStructure pole_structure(const MeijerGSpec& spec, double pole_tol = 1e-9);

/// Main entry point. Residue series over the poles of Γ(b_j - s), j <= m,
/// with logarithmic residues (or perturbation) for coincident poles and a
/// contour fallback for near coincidences and catastrophic cancellation.
GResult meijer_g_eval(const MeijerGSpec& spec, double z, const MeijerGOptions& opts = {});

double meijer_g(const MeijerGSpec& spec, double z);

/// Vertical-line quadrature of the Mellin-Barnes integral. `abscissa` must
/// separate the two pole families; NaN picks the midpoint of the strip.
GResult meijer_g_contour(const MeijerGSpec& spec, double z, double abscissa);
GResult meijer_g_contour(const MeijerGSpec& spec, double z);

/// Residue contributions of one cluster's pole family up to and including
/// the first pole of its highest member. For a singleton cluster this is the
/// leading Slater term z^{b_i} prod Γ(...) / prod Γ(...); for clustered
/// parameters it carries the logarithmic terms that replace the divergent
/// products. Zero when the family is cancelled by a denominator gamma.
double leading_residues(const MeijerGSpec& spec, const PoleCluster& cluster, double z,
                        const MeijerGOptions& opts = {});

/// Open interval of admissible abscissas for the contour (lo may be -inf,
/// hi may be +inf). Empty when lo >= hi.
struct Strip {
    double lo;
    double hi;
};
Strip contour_strip(const MeijerGSpec& spec);

} // namespace rfso::specfun
