#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gcross/report.hpp"

namespace gcross {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Word = std::vector<int>;

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> mul;
    int identity = 0;
    std::vector<int> inv;

    int order() const { return static_cast<int>(elements.size()); }
    int operator()(int g, int h) const { return mul[g][h]; }
    // Fills identity/inv from mul; returns false if no two-sided identity or inverse exists.
    bool finish();
    static GroupTable trivial();
    static GroupTable cyclic(int n);
    bool is_subgroup(const std::vector<int>& h) const;
};

struct SimpleLabel {
    std::string name;
    int dual = 0;
    int grade = 0;
    double qdim = 1.0;
    cplx pivotal{1.0, 0.0};
};

// One F-move block for fixed outer legs (a,b,c; d).
// rows: left-combed basis (e, alpha, beta); cols: right-combed basis (f, mu, nu).
struct FBlock {
    std::vector<std::array<int, 3>> rows, cols;
    std::map<std::array<int, 3>, int> row_ix, col_ix;
    Mat M, Minv;
};

struct EngineCache;  // defined in engine.cpp

// Copying a spec starts with a fresh (empty) cache; caches never leak across specs.
struct CacheHandle {
    std::shared_ptr<EngineCache> p;
    CacheHandle();
    CacheHandle(const CacheHandle&);
    CacheHandle& operator=(const CacheHandle&);
    CacheHandle(CacheHandle&&) noexcept = default;
    CacheHandle& operator=(CacheHandle&&) noexcept = default;
    ~CacheHandle();
};

struct Spec {
    std::string name;
    GroupTable group;
    std::vector<SimpleLabel> labels;
    int unit = 0;
    bool unitary = false;
    bool braided = true;
    double tol = 1e-9;

    // N[a][b][c]
    std::vector<std::vector<std::vector<int>>> N;
    std::map<std::array<int, 4>, FBlock> F;
    // (a,b,c): rows alpha of hom(c, ab), cols beta of hom(c, (^a b) a)
    std::map<std::array<int, 3>, Mat> R;
    std::vector<std::vector<int>> perm;  // perm[g][x]
    // (g,a,b,c): rows alpha of hom(c, ab), cols beta of hom(gc, (ga)(gb))
    std::map<std::array<int, 4>, Mat> U;

    // Provenance of derived specs (empty for files).
    std::string provenance;
    std::vector<std::pair<int, int>> pair_of;  // label -> (left, right) parent labels

    CacheHandle cache;

    int rank() const { return static_cast<int>(labels.size()); }
    int Nabc(int a, int b, int c) const { return N[a][b][c]; }
    int dual(int x) const { return labels[x].dual; }
    int grade(int x) const { return labels[x].grade; }
    double qdim(int x) const { return labels[x].qdim; }
    cplx pivotal(int x) const { return labels[x].pivotal; }
    int act(int g, int x) const { return perm[g][x]; }
    int find_label(const std::string& nm) const;

    int word_grade(const Word& w) const;
    Word act_word(int g, const Word& w) const;
    Word dual_word(const Word& w) const;

    // hom(d, abc) dimension computed from the left-combed side.
    int hom3(int a, int b, int c, int d) const;
    const FBlock* fblock(int a, int b, int c, int d) const;
    // Zero-size blocks are returned as empty matrices.
    Mat Rblock(int a, int b, int c) const;
    Mat Ublock(int g, int a, int b, int c) const;

    double global_dim() const;
    // Allocates empty F/R/U blocks of the right shape for the current N and perm.
    void allocate_blocks();
    // Recomputes cached F inverses after F has been filled.
    void finalize_blocks();
};

using SpecPtr = std::shared_ptr<const Spec>;

Spec load_spec(const std::string& path);
Spec parse_spec(const std::string& text, const std::string& name = "inline");
std::string spec_to_json(const Spec& s);

// Group axioms, grading, duality, pentagon, G-braiding, action coherence, sphericality, unitarity.
Report validate_spec(const Spec& s);

// grade -> indices of the summands having that grade.
std::map<int, std::vector<int>> decompose_homogeneous(const Spec& s, const std::vector<Word>& summands);

}  // namespace gcross
