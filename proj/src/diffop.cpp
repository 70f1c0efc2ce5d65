#include "jsk/diffop.hpp"

#include <fstream>

#include "jsk/errors.hpp"

namespace jsk {

bool Section::is_zero() const {
    for (const Polynomial& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

LinearDiffOp::LinearDiffOp(int n, int sourceComps, int targetComps,
                           std::string label)
    : n_(n), source_(sourceComps), target_(targetComps),
      label_(std::move(label)),
      entries_(static_cast<size_t>(sourceComps) * static_cast<size_t>(targetComps),
               Polynomial::zero(VarFamily::Derivative, n)) {
    // Zero components are allowed so an empty compatibility system can still
    // be represented as an operator.
    if (n < 1 || sourceComps < 0 || targetComps < 0)
        throw DimensionMismatch("operator needs n >= 1 and non-negative shape");
}

LinearDiffOp LinearDiffOp::from_strings(
    int n, const std::vector<std::vector<std::string>>& rows,
    std::string label) {
    if (rows.empty() || rows[0].empty())
        throw DimensionMismatch("operator matrix must be non-empty");
    LinearDiffOp op(n, static_cast<int>(rows[0].size()),
                    static_cast<int>(rows.size()), std::move(label));
    for (int i = 0; i < op.target_; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != op.source_)
            throw DimensionMismatch("ragged operator matrix");
        for (int j = 0; j < op.source_; ++j)
            op.entry(i, j) = Polynomial::parse(
                VarFamily::Derivative, n, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return op;
}

const Polynomial& LinearDiffOp::entry(int i, int j) const {
    return entries_[static_cast<size_t>(i) * source_ + j];
}

Polynomial& LinearDiffOp::entry(int i, int j) {
    return entries_[static_cast<size_t>(i) * source_ + j];
}

int LinearDiffOp::order() const {
    int d = -1;
    for (const Polynomial& p : entries_) d = std::max(d, p.degree());
    return d;
}

bool LinearDiffOp::is_zero() const { return order() < 0; }

bool LinearDiffOp::operator==(const LinearDiffOp& o) const {
    return n_ == o.n_ && source_ == o.source_ && target_ == o.target_ &&
           entries_ == o.entries_;
}

LinearDiffOp compose(const LinearDiffOp& a, const LinearDiffOp& b) {
    if (a.vars() != b.vars())
        throw DimensionMismatch("composing operators over different n");
    if (a.source_comps() != b.target_comps())
        throw DimensionMismatch("composing operators with mismatched shapes");
    LinearDiffOp c(a.vars(), b.source_comps(), a.target_comps(),
                   a.label().empty() || b.label().empty()
                       ? ""
                       : a.label() + "." + b.label());
    for (int i = 0; i < c.target_comps(); ++i)
        for (int j = 0; j < c.source_comps(); ++j) {
            Polynomial s = Polynomial::zero(VarFamily::Derivative, a.vars());
            for (int k = 0; k < a.source_comps(); ++k)
                s += a.entry(i, k) * b.entry(k, j);
            c.entry(i, j) = s;
        }
    return c;
}

LinearDiffOp adjoint(const LinearDiffOp& op) {
    LinearDiffOp ad(op.vars(), op.target_comps(), op.source_comps(),
                    op.label().empty() ? "" : "adjoint(" + op.label() + ")");
    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j) {
            Polynomial flipped(VarFamily::Derivative, op.vars());
            for (const auto& [mu, c] : op.entry(i, j).terms())
                flipped.add_term(mu, mu.degree() % 2 == 0 ? c : -c);
            ad.entry(j, i) = flipped;
        }
    return ad;
}

namespace {

// Apply c * d^mu to a position polynomial.
Polynomial apply_term(const Rational& c, const MultiIndex& mu,
                      const Polynomial& s) {
    Polynomial r = s * c;
    for (int axis = 0; axis < mu.size(); ++axis)
        for (int k = 0; k < mu[axis] && !r.is_zero(); ++k)
            r = r.differentiate(axis);
    return r;
}

}  // namespace

Section apply(const LinearDiffOp& op, const Section& s) {
    if (s.n != op.vars() || s.size() != op.source_comps())
        throw DimensionMismatch("section does not match operator source");
    Section out(op.vars(), op.target_comps());
    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j)
            for (const auto& [mu, c] : op.entry(i, j).terms())
                out.comps[static_cast<size_t>(i)] +=
                    apply_term(c, mu, s.comps[static_cast<size_t>(j)]);
    return out;
}

Polynomial GreensIdentity::residual() const {
    Polynomial r = pairing_left - pairing_right;
    for (size_t a = 0; a < flux.size(); ++a)
        r -= flux[a].differentiate(static_cast<int>(a));
    return r;
}

// Peel derivatives off xi one at a time (axis 1 first, then axis 2, ...):
//   u . (da w) = da(u w) - (da u) . w
// moves u w into the flux along axis a and continues with -da u.  What is
// left at the end is exactly the adjoint pairing, so the residual vanishes
// identically.
GreensIdentity greens_identity(const LinearDiffOp& op, const Section& lambda,
                               const Section& xi) {
    if (lambda.n != op.vars() || lambda.size() != op.target_comps())
        throw DimensionMismatch("covector does not match operator target");
    if (xi.n != op.vars() || xi.size() != op.source_comps())
        throw DimensionMismatch("section does not match operator source");
    int n = op.vars();

    GreensIdentity out;
    out.flux.assign(static_cast<size_t>(n), Polynomial::zero(VarFamily::Position, n));

    Section opxi = apply(op, xi);
    out.pairing_left = Polynomial::zero(VarFamily::Position, n);
    for (int i = 0; i < op.target_comps(); ++i)
        out.pairing_left +=
            lambda.comps[static_cast<size_t>(i)] * opxi.comps[static_cast<size_t>(i)];

    Section adlam = apply(adjoint(op), lambda);
    out.pairing_right = Polynomial::zero(VarFamily::Position, n);
    for (int j = 0; j < op.source_comps(); ++j)
        out.pairing_right +=
            adlam.comps[static_cast<size_t>(j)] * xi.comps[static_cast<size_t>(j)];

    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j)
            for (const auto& [mu, c] : op.entry(i, j).terms()) {
                Polynomial u = lambda.comps[static_cast<size_t>(i)] * c;
                MultiIndex rem = mu;
                for (int axis = 0; axis < n; ++axis)
                    while (rem[axis] > 0) {
                        rem = rem.minus(axis);
                        out.flux[static_cast<size_t>(axis)] +=
                            u * apply_term(1, rem, xi.comps[static_cast<size_t>(j)]);
                        u = -u.differentiate(axis);
                    }
            }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization.

nlohmann::ordered_json diffop_to_json(const LinearDiffOp& op) {
    nlohmann::ordered_json j;
    j["n"] = op.vars();
    j["sourceComps"] = op.source_comps();
    j["targetComps"] = op.target_comps();
    j["label"] = op.label();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < op.target_comps(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int jcol = 0; jcol < op.source_comps(); ++jcol)
            row.push_back(op.entry(i, jcol).str());
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

LinearDiffOp diffop_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("operator record must be an object", 1, 1);
    for (const char* key : {"n", "sourceComps", "targetComps", "entries"})
        if (!j.contains(key))
            throw ParseError(std::string("operator record is missing '") + key + "'",
                             1, 1);
    int n = j.at("n").get<int>();
    int source = j.at("sourceComps").get<int>();
    int target = j.at("targetComps").get<int>();
    if (n < 1) throw ParseError("operator record has n < 1", 1, 1);
    if (source < 1) throw ParseError("operator record has sourceComps < 1", 1, 1);
    if (target < 1) throw ParseError("operator record has targetComps < 1", 1, 1);
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != target)
        throw ParseError("entries must have targetComps rows", 1, 1);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != source)
            throw ParseError("entries rows must have sourceComps columns", 1, 1);
        std::vector<std::string> r;
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw ParseError("entries cells must be polynomial strings", 1, 1);
            r.push_back(cell.get<std::string>());
        }
        rows.push_back(std::move(r));
    }
    std::string label = j.value("label", std::string());
    return LinearDiffOp::from_strings(n, rows, label);
}

LinearDiffOp load_diffop(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open operator file '" + path + "'", 1, 1);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON in '") + path + "': " + e.what(), 1, 1);
    }
    return diffop_from_json(j);
}

void save_diffop(const LinearDiffOp& op, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write operator file '" + path + "'");
    out << diffop_to_json(op).dump(2) << "\n";
}

}  // namespace jsk
