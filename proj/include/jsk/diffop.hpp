#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "jsk/polynomial.hpp"

namespace jsk {

// A tuple of position polynomials: a polynomial section of a trivial bundle
// with `comps.size()` components over n independent variables.
struct Section {
    int n = 0;
    std::vector<Polynomial> comps;

    Section() = default;
    Section(int n, int count)
        : n(n), comps(static_cast<size_t>(count),
                      Polynomial::zero(VarFamily::Position, n)) {}

    int size() const { return static_cast<int>(comps.size()); }
    bool is_zero() const;
    bool operator==(const Section& o) const {
        return n == o.n && comps == o.comps;
    }
};

// Linear differential operator with constant rational coefficients, stored as
// a targetComps x sourceComps matrix of polynomials in the derivative symbols
// d1..dn.  Entry (i, j) acts on source component j and lands in target
// component i.
class LinearDiffOp {
  public:
    LinearDiffOp() : n_(0), source_(0), target_(0) {}
    LinearDiffOp(int n, int sourceComps, int targetComps,
                 std::string label = "");

    static LinearDiffOp from_strings(
        int n, const std::vector<std::vector<std::string>>& rows,
        std::string label = "");

    int vars() const { return n_; }
    int source_comps() const { return source_; }
    int target_comps() const { return target_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const Polynomial& entry(int i, int j) const;
    Polynomial& entry(int i, int j);

    // Max total degree over all entries; -1 for the zero operator.
    int order() const;
    bool is_zero() const;

    bool operator==(const LinearDiffOp& o) const;

  private:
    int n_, source_, target_;
    std::string label_;
    std::vector<Polynomial> entries_;  // row-major, target rows
};

// a after b: (a . b)(s) = a(b(s)).  Requires b.target_comps == a.source_comps.
LinearDiffOp compose(const LinearDiffOp& a, const LinearDiffOp& b);

// Formal adjoint: transpose the matrix and send each dk to -dk.
LinearDiffOp adjoint(const LinearDiffOp& op);

Section apply(const LinearDiffOp& op, const Section& s);

// Integration-by-parts certificate for the pairing
//   lambda . (op xi)  =  (adjoint(op) lambda) . xi  +  div(flux).
// residual() recomputes the difference from scratch; it is identically zero
// by construction and tests assert that.
struct GreensIdentity {
    Polynomial pairing_left;    // lambda . (op xi)
    Polynomial pairing_right;   // (adjoint(op) lambda) . xi
    std::vector<Polynomial> flux;

    Polynomial residual() const;
    bool holds() const { return residual().is_zero(); }
};

GreensIdentity greens_identity(const LinearDiffOp& op, const Section& lambda,
                               const Section& xi);

// Stable on-disk form: polynomial strings inside a small JSON record.
nlohmann::ordered_json diffop_to_json(const LinearDiffOp& op);
LinearDiffOp diffop_from_json(const nlohmann::json& j);

LinearDiffOp load_diffop(const std::string& path);
void save_diffop(const LinearDiffOp& op, const std::string& path);

}  // namespace jsk
