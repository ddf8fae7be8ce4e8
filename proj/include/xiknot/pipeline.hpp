#pragma once

#include "xiknot/cover.hpp"
#include "xiknot/matrix.hpp"
#include "xiknot/perm.hpp"
#include "xiknot/seifert.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xiknot {

struct ProblemError : std::runtime_error {
    explicit ProblemError(const std::string& msg) : std::runtime_error(msg) {}
};

// One formal difference of lifts, curve^j - curve^k (1-based sheet labels).
struct BasisDiff {
    std::string curve;
    int j = 1, k = 2;

    std::string label() const;
    bool operator==(const BasisDiff& o) const { return curve == o.curve && j == o.j && k == o.k; }
};

struct LoopMonodromy {
    std::string name;
    Perm3 mu;
};

struct BoundaryMonodromy {
    Perm3 right, left;
};

// The 2g-1 differences paired in the big matrix: for each loop curve the two
// lifts away from mu(c0), smaller label first; for the boundary-parallel
// curve the lift named by the right walk minus the one named by neither walk.
std::vector<BasisDiff> basis_lifts(const std::vector<LoopMonodromy>& loops,
                                   const std::string& boundary_name,
                                   const BoundaryMonodromy& boundary, int c0, int genus);

// Source of the 3x3 matrices lk(g^j, (h^+)^k) between labelled lifts of a
// curve g and of the positive push-off of a curve h.
class BlockProvider {
  public:
    virtual ~BlockProvider() = default;
    virtual Mat<Rat> block(const std::string& g, const std::string& h) = 0;
    virtual std::string origin() const = 0;
    // Invariant factors of the cover's first homology, when the provider
    // builds covers at all.
    virtual std::optional<std::vector<Int>> h1() const { return std::nullopt; }
};

// Builds the branched cover of every scene and computes blocks on demand.
// block(g, h) needs one scene holding g, h, and an explicit push-off of h
// (a trace component with pushoff_of == h) whose anchor walk matches h's.
class ComputedBlockProvider : public BlockProvider {
  public:
    explicit ComputedBlockProvider(const std::vector<Scene>& scenes);

    Mat<Rat> block(const std::string& g, const std::string& h) override;
    std::string origin() const override { return "computed"; }
    std::optional<std::vector<Int>> h1() const override;

    size_t count() const { return covers_.size(); }
    const CoverComplex& cover(size_t i) const { return *covers_.at(i); }

  private:
    std::vector<std::unique_ptr<CoverComplex>> covers_;
    std::map<std::pair<std::string, std::string>, Mat<Rat>> cache_;
};

// Serves blocks from a JSON file of named 3x3 rational matrices, keyed
// "g|h+".  Each block must have constant row sums (the sheet sums of any
// true lift table all project to one classical linking number), and each
// diagonal block "g|g+" must be symmetric.
class TableBlockProvider : public BlockProvider {
  public:
    static TableBlockProvider parse_text(const std::string& json_text, const std::string& origin);
    static TableBlockProvider load_file(const std::string& path);

    Mat<Rat> block(const std::string& g, const std::string& h) override;
    std::string origin() const override { return origin_; }

    std::vector<std::string> keys() const;

  private:
    std::string origin_;
    std::map<std::string, Mat<Rat>> blocks_;
};

// m[r][s] = lk(A_r - B_r, A_s^+ - B_s^-) expanded into four block entries,
// with negative-push-off values folded through lk(X, Z^-) = lk(Z, X^+).
Mat<Rat> assemble_M(BlockProvider& blocks, const std::vector<BasisDiff>& basis);

// Signature contribution of the pairing matrix: minus the signature of its
// symmetric part.
int sigma_w(const Mat<Rat>& m);

// p * sigma_x - (p-1)/4 * e_b - xi, exactly.
Rat cover_signature(int p, const Int& sigma_x, const Int& e_b, const Rat& xi);

// |xi| > (p-1)/2 rules out a homotopy-ribbon filling compatible with the
// coloring, provided the cover is a rational homology sphere.
bool xi_obstructs(const Rat& xi, int p);
std::string ribbon_verdict(const Rat& xi, int p);

// Everything compute_xi needs: scenes and/or a block table, the spanning
// surface data, the characteristic curve, and the curve order of the big
// matrix.  Monodromies come from scene anchor walks when the curve lives in
// a scene, else from the explicit entries.
struct CharacteristicInput {
    std::string name;
    std::vector<Int> vec;   // coordinates in the surface basis
    SeifertData seifert;    // Seifert data of the characteristic curve itself
};

struct ProblemInput {
    std::string name;
    int p = 3;
    std::vector<Scene> scenes;
    std::optional<std::string> table_path;
    SeifertData surface;
    CharacteristicInput characteristic;
    std::vector<std::string> basis_order;  // loop curves first, characteristic last
    std::map<std::string, Perm3> loop_monodromies;
    std::optional<BoundaryMonodromy> boundary_monodromy;
    std::optional<int> c0;
};

ProblemInput parse_problem_text(const std::string& json_text, const std::string& base_dir);
ProblemInput load_problem_file(const std::string& path);

struct XiReport {
    std::string name;
    int p = 3;
    std::string provider;
    bool h1_known = false;
    std::vector<Int> h1;
    int c0 = 1;
    std::vector<std::pair<std::string, Perm3>> monodromies;
    std::vector<BasisDiff> basis;
    Mat<Rat> m;
    int sigma_m = 0;
    int sigma_w = 0;
    Rat term_form;   // (p^2-1)/(6p) times the surface self-pairing of the characteristic vector
    Rat term_twist;  // sum of the twisted signatures of the characteristic curve
    Rat xi;
    bool xi_integral = true;
    std::string verdict;
    std::vector<std::string> warnings;
};

XiReport compute_xi(const ProblemInput& in, BlockProvider& blocks);
XiReport compute_xi(const ProblemInput& in);

std::string report_json(const XiReport& r);
std::string report_summary(const XiReport& r);

}  // namespace xiknot
