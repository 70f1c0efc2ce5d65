#include "jsk/reports.hpp"

#include <algorithm>
#include <sstream>

#include "jsk/errors.hpp"
#include "jsk/jets.hpp"
#include "jsk/ratmatrix.hpp"
#include "jsk/rng.hpp"
#include "jsk/scenarios.hpp"
#include "jsk/syzygy.hpp"

namespace jsk {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20260815ULL;

void add_check(Report& r, const std::string& name, bool pass) {
    r.checks.emplace_back(name, pass);
}

long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    long v = 1;
    for (int i = 0; i < b; ++i) v = v * (a - i) / (i + 1);
    return v;
}

std::string pad(std::string s, size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

// ---------------------------------------------------------------------------
// Section builders.

std::vector<std::string> operator_lines(const LinearDiffOp& op) {
    std::vector<std::string> lines;
    std::string head = "n=" + std::to_string(op.vars()) +
                       "  source=" + std::to_string(op.source_comps()) +
                       "  target=" + std::to_string(op.target_comps()) +
                       "  order=" + std::to_string(op.order());
    if (!op.label().empty()) head += "  (" + op.label() + ")";
    lines.push_back(head);
    if (op.target_comps() == 0) {
        lines.push_back("(no rows)");
        return lines;
    }
    std::vector<std::vector<std::string>> cells(
        static_cast<size_t>(op.target_comps()));
    std::vector<size_t> width(static_cast<size_t>(op.source_comps()), 1);
    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j) {
            std::string s = op.entry(i, j).str();
            width[static_cast<size_t>(j)] =
                std::max(width[static_cast<size_t>(j)], s.size());
            cells[static_cast<size_t>(i)].push_back(std::move(s));
        }
    for (int i = 0; i < op.target_comps(); ++i) {
        std::string line = "[ ";
        for (int j = 0; j < op.source_comps(); ++j) {
            if (j) line += "  ";
            line += pad(cells[static_cast<size_t>(i)][static_cast<size_t>(j)],
                        width[static_cast<size_t>(j)]);
        }
        line += " ]";
        lines.push_back(std::move(line));
    }
    return lines;
}

ReportSection operator_section(const std::string& title,
                               const LinearDiffOp& op) {
    return {title, "operator", diffop_to_json(op), operator_lines(op)};
}

ReportSection text_section(const std::string& title,
                           std::vector<std::string> lines) {
    ordered_json payload = lines;
    return {title, "text", std::move(payload), std::move(lines)};
}

ReportSection table_section(const std::string& title,
                            std::vector<std::string> headers,
                            std::vector<std::vector<std::string>> rows) {
    ordered_json payload;
    payload["headers"] = headers;
    payload["rows"] = rows;
    std::vector<size_t> width(headers.size(), 1);
    for (size_t j = 0; j < headers.size(); ++j)
        width[j] = std::max(width[j], headers[j].size());
    for (const auto& row : rows)
        for (size_t j = 0; j < row.size() && j < width.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    std::vector<std::string> lines;
    std::string head;
    for (size_t j = 0; j < headers.size(); ++j) {
        if (j) head += "  ";
        head += pad(headers[j], width[j]);
    }
    lines.push_back(head);
    std::string rule;
    for (size_t j = 0; j < headers.size(); ++j) {
        if (j) rule += "  ";
        rule += std::string(width[j], '-');
    }
    lines.push_back(rule);
    for (const auto& row : rows) {
        std::string line;
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) line += "  ";
            line += pad(row[j], width[j]);
        }
        lines.push_back(line);
    }
    return {title, "table", std::move(payload), std::move(lines)};
}

// One row of a diagram grid: nodes are the circled numbers, drawn as (d) and
// horizontally aligned across rows via `columnOffset`.
std::string grid_row(const std::string& name, const SequenceDims& seq,
                     int columnOffset) {
    std::string line = pad(name, 10);
    std::string start = "0 --> ";
    if (seq.sourceDim > 0)
        start = "0 --> " + std::to_string(seq.sourceDim) + " --> ";
    size_t startArea =
        14 + 9 * static_cast<size_t>(columnOffset);
    line += std::string(startArea - start.size(), ' ') + start;
    for (size_t k = 0; k < seq.dims.size(); ++k) {
        std::string cell = "(" + std::to_string(seq.dims[k]) + ")";
        line += pad(cell, 4);
        line += (k + 1 < seq.dims.size()) ? " --> " : " --> 0";
    }
    return line;
}

ordered_json seq_json(const SequenceDims& seq) {
    ordered_json j;
    j["source"] = seq.sourceDim;
    j["dims"] = seq.dims;
    j["eulerSum"] = seq.euler_sum();
    return j;
}

ReportSection diagram_section(const std::string& title, const DiagramReport& d,
                              int spencerOffset) {
    ordered_json payload;
    payload["theta"] = d.thetaDim;
    payload["spencer"] = seq_json(d.spencerRow);
    payload["middle"] = seq_json(d.middleRow);
    payload["janet"] = seq_json(d.janetRow);
    std::vector<std::string> lines;
    lines.push_back("solution space dimension (theta): " +
                    std::to_string(d.thetaDim));
    lines.push_back(grid_row("Spencer", d.spencerRow, spencerOffset));
    lines.push_back(grid_row("middle", d.middleRow, 0));
    lines.push_back(grid_row("Janet", d.janetRow, 0));
    return {title, "diagram", std::move(payload), std::move(lines)};
}

ReportSection certificate_section(const std::string& title,
                                  const GreensIdentity& cert) {
    ordered_json payload;
    payload["pairingLeft"] = cert.pairing_left.str();
    payload["pairingRight"] = cert.pairing_right.str();
    ordered_json flux = ordered_json::array();
    for (const Polynomial& f : cert.flux) flux.push_back(f.str());
    payload["flux"] = flux;
    payload["residual"] = cert.residual().str();
    std::vector<std::string> lines;
    lines.push_back("lambda . (D xi)           = " + cert.pairing_left.str());
    lines.push_back("(adjoint D) lambda . xi   = " + cert.pairing_right.str());
    for (size_t i = 0; i < cert.flux.size(); ++i)
        lines.push_back("flux component " + std::to_string(i + 1) +
                        "          = " + cert.flux[i].str());
    lines.push_back("left - right - div(flux)  = " + cert.residual().str());
    return {title, "certificate", std::move(payload), std::move(lines)};
}

RationalFunction rf(int n, const std::string& text) {
    return RationalFunction(Polynomial::parse(VarFamily::Position, n, text));
}

MetricSpec metric_for(const std::string& signature, int n) {
    if (signature == "euclid") return MetricSpec::euclidean(n);
    if (signature == "minkowski") return MetricSpec::minkowski(n);
    throw UsageError("signature must be euclid or minkowski");
}

// ---------------------------------------------------------------------------
// Scenario builders.  Each fills checks and sections; scenario name and
// params are set by run_scenario.

void scenario_affine(Report& r) {
    DiagramReport d = affine_diagram();
    r.checks = d.checks;
    r.sections.push_back(
        diagram_section("second-order system in one variable", d, 1));
    r.sections.push_back(operator_section(
        "system operator",
        LinearDiffOp::from_strings(1, {{"d1^2"}}, "xi_xx = 0")));
    r.sections.push_back(
        operator_section("restricted first Spencer operator on (xi, xi_x)",
                         spencer_d1_affine()));
}

void scenario_killing2(Report& r) {
    DiagramReport d = killing_n2_diagram();
    r.checks = d.checks;
    r.sections.push_back(
        diagram_section("plane isometry system (2 translations + 1 rotation)",
                        d, 0));
    LinearDiffOp stack = killing_with_christoffel(2);
    LinearDiffOp cc1 = rows_to_operator(
        2, stack.target_comps(), syzygy_space_basis(stack, 1),
        "first-order compatibility conditions");
    LinearDiffOp cc2 =
        rows_to_operator(2, cc1.target_comps(), syzygy_space_basis(cc1, 1),
                         "compatibility conditions of the conditions");
    r.sections.push_back(operator_section(
        "metric + Christoffel deformation system (9 equations)", stack));
    r.sections.push_back(operator_section("first compatibility operator (10 rows)", cc1));
    r.sections.push_back(
        operator_section("second compatibility operator (3 rows)", cc2));
    r.sections.push_back(operator_section(
        "first Spencer operator on (xi1, xi2, rho)", spencer_d1_killing2()));
    r.sections.push_back(
        operator_section("second Spencer operator", spencer_d2_killing2()));
}

void scenario_cosserat1d(Report& r) {
    Cosserat1dResult c = cosserat_1d();
    r.checks = c.checks;
    r.sections.push_back(operator_section(
        "first Spencer operator on (xi, xi_x)", c.d1));
    r.sections.push_back(operator_section(
        "momenta equations (sign-normalized adjoint)", c.equations));
    r.sections.push_back(
        certificate_section("integration-by-parts certificate", c.certificate));
}

void scenario_cosserat2(Report& r) {
    CosseratN2Result c = cosserat_n2();
    r.checks = c.checks;
    r.sections.push_back(operator_section(
        "first Spencer operator on (xi1, xi2, rho)", c.d1));
    r.sections.push_back(operator_section(
        "stress/couple-stress equations on (s11, s12, s21, s22, m1, m2)",
        c.equations));
    r.sections.push_back(operator_section(
        "first-order parametrization by (phi1, phi2, phi3)", c.param));
    r.sections.push_back(operator_section(
        "substitution phi1 = d2 phi, phi2 = d1 phi, phi3 = -phi",
        c.airyReduction));
    r.sections.push_back(operator_section(
        "reduced parametrization (classical stresses)", c.reducedParam));
}

void scenario_airy(Report& r) {
    AiryDualityResult a = airy_duality_n2();
    r.checks = a.checks;
    r.sections.push_back(operator_section(
        "compatibility condition of the plane strain operator", a.strainCC));
    r.sections.push_back(
        operator_section("its formal adjoint (second-order column)", a.adjointCC));
    r.sections.push_back(
        operator_section("stress function parametrization", a.airy));
    r.sections.push_back(
        operator_section("plane equilibrium equations", a.divergence));
}

void scenario_counts(Report& r, int n) {
    CountReport c = riemann_weyl_counts(n);
    add_check(r, "curvature count: closed form equals prolongation count",
              c.riemannClosed == c.riemannRank);
    if (c.weylApplicable) {
        add_check(r, "trace-free count: closed form equals prolongation count",
                  c.weylClosed == c.weylRank);
        add_check(r,
                  "difference of the two counts is the symmetric-tensor count "
                  "n(n+1)/2",
                  c.riemannClosed - c.weylClosed == c.ricciClosed);
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"curvature  n^2(n^2-1)/12", std::to_string(c.riemannClosed),
                    std::to_string(c.riemannRank)});
    if (c.weylApplicable) {
        rows.push_back({"trace-free n(n+1)(n+2)(n-3)/12",
                        std::to_string(c.weylClosed),
                        std::to_string(c.weylRank)});
        rows.push_back({"trace part n(n+1)/2", std::to_string(c.ricciClosed),
                        std::to_string(c.riemannRank - c.weylRank)});
    } else {
        rows.push_back({"trace-free n(n+1)(n+2)(n-3)/12", "-", "-"});
        rows.push_back({"trace part n(n+1)/2", std::to_string(c.ricciClosed), "-"});
    }
    r.sections.push_back(table_section(
        "second-order compatibility counts at n = " + std::to_string(n),
        {"tensor", "closed form", "from ranks"}, std::move(rows)));
}

void scenario_conformal(Report& r, int n, int degreeBound,
                        const std::string& signature) {
    MetricSpec metric = metric_for(signature, n);
    LinearDiffOp op = conformal_killing(n, metric);
    r.sections.push_back(operator_section("trace-free deformation operator", op));

    // The weighted trace of the equation rows vanishes identically.
    bool traceZero = true;
    {
        std::vector<Polynomial> sum(
            static_cast<size_t>(op.source_comps()),
            Polynomial::zero(VarFamily::Derivative, n));
        int row = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (i == j)
                    for (int col = 0; col < op.source_comps(); ++col)
                        sum[static_cast<size_t>(col)] +=
                            op.entry(row, col) * Rational(metric.sign(i));
                ++row;
            }
        for (const Polynomial& p : sum) traceZero = traceZero && p.is_zero();
    }
    add_check(r, "weighted trace of the equations vanishes identically",
              traceZero);

    std::vector<std::vector<std::string>> dimRows;
    if (n >= 3) {
        long dim0 = static_cast<long>(
            polynomial_solutions(op, degreeBound).basis.size());
        long dim1 = static_cast<long>(
            polynomial_solutions(op, degreeBound + 1).basis.size());
        long expected = static_cast<long>(n + 1) * (n + 2) / 2;
        add_check(r,
                  "solution dimension equals (n+1)(n+2)/2 = " +
                      std::to_string(expected),
                  dim0 == expected);
        add_check(r, "solution dimension is stationary in the degree bound",
                  dim0 == dim1);
        dimRows.push_back({std::to_string(degreeBound), std::to_string(dim0)});
        dimRows.push_back({std::to_string(degreeBound + 1), std::to_string(dim1)});
    } else {
        long dim0 = static_cast<long>(
            polynomial_solutions(op, degreeBound).basis.size());
        long dim1 = static_cast<long>(
            polynomial_solutions(op, degreeBound + 1).basis.size());
        long dim2 = static_cast<long>(
            polynomial_solutions(op, degreeBound + 2).basis.size());
        add_check(r,
                  "solution dimension keeps growing with the bound (no finite "
                  "type at n = 2)",
                  dim0 < dim1 && dim1 < dim2);
        dimRows.push_back({std::to_string(degreeBound), std::to_string(dim0)});
        dimRows.push_back({std::to_string(degreeBound + 1), std::to_string(dim1)});
        dimRows.push_back({std::to_string(degreeBound + 2), std::to_string(dim2)});
    }
    r.sections.push_back(table_section("polynomial solution dimensions",
                                       {"degree bound", "dimension"},
                                       std::move(dimRows)));
}

void scenario_maurer_cartan(Report& r, std::uint64_t seed) {
    r.sections.push_back(text_section(
        "structure constants",
        {"basis (dilatation, translation) of the 1D affine algebra,",
         "[dilatation, translation] = translation"}));

    Rng rng(seed);
    bool allFlat = true;
    std::vector<std::string> trialLines;
    for (int t = 0; t < 20; ++t) {
        RationalFunction a1 = rng.ratfunc(VarFamily::Position, 2, 2, 2);
        while (a1.is_zero()) a1 = rng.ratfunc(VarFamily::Position, 2, 2, 2);
        RationalFunction a2 = rng.ratfunc(VarFamily::Position, 2, 2, 2);
        GaugePotential A = affine_potential(a1, a2, 2);
        bool flat = maurer_cartan(A, StructureConstants::affine1d()).is_zero();
        allFlat = allFlat && flat;
        trialLines.push_back("a1 = " + a1.str() + "   a2 = " + a2.str() +
                             "   curvature zero: " + (flat ? "yes" : "no"));
    }
    add_check(r, "curvature of a^{-1}da vanishes (20 random group elements)",
              allFlat);
    r.sections.push_back(
        text_section("random group elements", std::move(trialLines)));

    // Perturb one slot of a flat potential; flatness must break.
    GaugePotential A = affine_potential(rf(2, "x1 + 1"), rf(2, "x1^2"), 2);
    A.at(0, 1) = A.at(0, 1) +
                 RationalFunction(Polynomial::variable(VarFamily::Position, 2, 0));
    add_check(r, "perturbing the potential breaks flatness",
              !maurer_cartan(A, StructureConstants::affine1d()).is_zero());

    // Abelian constants: curvature reduces to the exterior differential.
    GaugePotential B(1, 2);
    B.at(0, 0) = rf(2, "x1*x2");
    B.at(0, 1) = rf(2, "x1^2");
    Curvature F = maurer_cartan(B, StructureConstants::zero(1));
    add_check(r, "abelian curvature is the exterior differential of A",
              F.at(0, 0, 1) == rf(2, "x1"));

    // Structure constants failing the Jacobi identity are rejected.
    bool rejected = false;
    try {
        std::vector<std::vector<std::vector<Rational>>> c(
            3, std::vector<std::vector<Rational>>(3,
                                                  std::vector<Rational>(3, 0)));
        // [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1: violates Jacobi.
        c[2][0][1] = 1; c[2][1][0] = -1;
        c[0][1][2] = 1; c[0][2][1] = -1;
        c[0][0][2] = 1; c[0][2][0] = -1;
        StructureConstants bad(3, c);
        (void)bad;
    } catch (const JacobiError&) {
        rejected = true;
    }
    add_check(r, "constants violating the Jacobi identity are rejected",
              rejected);
}

void scenario_gauging(Report& r) {
    GaugeDemoResult g = affine_gauge_demo(rf(2, "x1 + 1"), rf(2, "x1^2"));
    r.checks = g.checks;

    Polynomial x = Polynomial::variable(VarFamily::Position, 1, 0);
    Polynomial one = Polynomial::constant(VarFamily::Position, 1, 1);
    Polynomial zero = Polynomial::zero(VarFamily::Position, 1);
    bool matrixMatches =
        g.gaugingMatrix ==
        std::vector<std::vector<Polynomial>>{{x, one}, {one, zero}, {zero, zero}};
    add_check(r, "gauging matrix rows are the parameter derivatives of (f, f_x, f_xx)",
              matrixMatches);

    GaugeDemoResult id = affine_gauge_demo(rf(2, "1"), rf(2, "0"));
    bool zeroPotential = true;
    for (int i = 0; i < id.A.n; ++i)
        for (int tau = 0; tau < id.A.p; ++tau)
            zeroPotential = zeroPotential && id.A.at(tau, i).is_zero();
    add_check(r, "identity element gives the zero potential", zeroPotential);
    add_check(r, "identity element is flat", id.flat);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> names = {"f", "f_x", "f_xx"};
    for (size_t i = 0; i < g.gaugingMatrix.size(); ++i)
        rows.push_back({names[i], g.gaugingMatrix[i][0].str(),
                        g.gaugingMatrix[i][1].str()});
    r.sections.push_back(table_section(
        "gauging matrix for y = a1 x + a2 (rank " +
            std::to_string(g.gaugingRank) + ")",
        {"jet", "d/d a1", "d/d a2"}, std::move(rows)));

    std::vector<std::string> potLines;
    for (int tau = 0; tau < g.A.p; ++tau)
        for (int i = 0; i < g.A.n; ++i)
            potLines.push_back("A^" + std::to_string(tau + 1) + "_" +
                               std::to_string(i + 1) + " = " +
                               g.A.at(tau, i).str());
    r.sections.push_back(text_section(
        "Maurer-Cartan potential of a1 = x1 + 1, a2 = x1^2",
        std::move(potLines)));
}

void scenario_elations(Report& r, const std::string& signature,
                       std::uint64_t seed) {
    MetricSpec metric = metric_for(signature, 4);
    r.sections.push_back(text_section(
        "second-order jet formula",
        {"xi^k_ij = delta^k_i a_j + delta^k_j a_i - w_ij w^{kr} a_r",
         "field:  F_ij = d_i xi^r_rj - d_j xi^r_ri = 4 (d_i a_j - d_j a_i)"}));

    // Classic example: a = (x2, 0, 0, 0).
    Section classic(4, 4);
    classic.comps[0] = Polynomial::variable(VarFamily::Position, 4, 1);
    ElationResult e = elations_em(metric, classic);
    bool classicField = e.field(0, 1) ==
                        Polynomial::constant(VarFamily::Position, 4, -4);
    for (int i = 0; i < 4 && classicField; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(i == 0 && j == 1))
                classicField = classicField && e.field(i, j).is_zero();
    add_check(r, "a = (x2, 0, 0, 0) gives F_12 = -4 and no other component",
              classicField && e.ok());
    std::vector<std::vector<std::string>> fRows;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            fRows.push_back({"F_" + std::to_string(i + 1) + std::to_string(j + 1),
                             e.field(i, j).str()});
    r.sections.push_back(table_section("field of a = (x2, 0, 0, 0)",
                                       {"component", "value"}, std::move(fRows)));

    Rng rng(seed);
    bool randomOk = true;
    for (int t = 0; t < 50; ++t) {
        Section a = rng.section(4, 4, 2, 2);
        ElationResult trial = elations_em(metric, a);
        randomOk = randomOk && trial.ok();
    }
    add_check(r,
              "trace identity, field formula and closedness hold (50 random "
              "covectors)",
              randomOk);

    bool gradientOk = true;
    for (int t = 0; t < 10; ++t) {
        Polynomial phi = rng.polynomial(VarFamily::Position, 4, 3, 3);
        Section grad(4, 4);
        for (int i = 0; i < 4; ++i) grad.comps[static_cast<size_t>(i)] =
            phi.differentiate(i);
        ElationResult trial = elations_em(metric, grad);
        gradientOk = gradientOk && trial.ok() && trial.field_zero();
    }
    add_check(r, "gradient covectors give a vanishing field (10 random potentials)",
              gradientOk);
}

void scenario_poincare(Report& r, int n, int degreeBound) {
    std::vector<LinearDiffOp> d;
    for (int k = 0; k < n; ++k) d.push_back(exterior_derivative(n, k));

    bool ddZero = true;
    for (int k = 0; k + 1 < n; ++k)
        ddZero = ddZero && compose(d[static_cast<size_t>(k + 1)],
                                   d[static_cast<size_t>(k)]).is_zero();
    add_check(r, "d . d = 0 at every step", ddZero);

    bool ccExact = true;
    for (int k = 0; k + 1 < n; ++k)
        ccExact = ccExact && check_exactness_pair(d[static_cast<size_t>(k)],
                                                  d[static_cast<size_t>(k + 1)]);
    add_check(r, "compatibility conditions of d_r are generated by d_{r+1}",
              ccExact);

    add_check(r, "top-degree operator has no compatibility conditions",
              compatibility_conditions(d[static_cast<size_t>(n - 1)])
                  .generators.empty());

    // Formal Poincare lemma as a dimension ladder: closed r-forms of
    // coefficient degree <= D are exactly the differentials of (r-1)-forms of
    // degree <= D+1, so dim closed(r, D) + dim closed(r-1, D+1) counts all
    // (r-1)-form coefficients of degree <= D+1.
    const int D = degreeBound;
    auto closedDim = [&](int form, int bound) -> long {
        if (form == n) return binom(n + bound, n);
        return static_cast<long>(
            polynomial_solutions(d[static_cast<size_t>(form)], bound)
                .basis.size());
    };
    bool ladder = true;
    std::vector<std::vector<std::string>> ladderRows;
    for (int form = 1; form <= n; ++form) {
        long lhs = closedDim(form, D) + closedDim(form - 1, D + 1);
        long rhs = binom(n, form - 1) * binom(n + D + 1, n);
        ladder = ladder && lhs == rhs;
        ladderRows.push_back({std::to_string(form),
                              std::to_string(closedDim(form, D)),
                              std::to_string(lhs), std::to_string(rhs)});
    }
    add_check(r, "closed forms are exactly the differentials (dimension ladder)",
              ladder);
    r.sections.push_back(table_section(
        "dimension ladder at degree bound " + std::to_string(D),
        {"form degree", "closed dim", "closed(r) + closed(r-1, D+1)",
         "all (r-1)-forms, deg <= D+1"},
        std::move(ladderRows)));

    bool selfAdjoint = true;
    std::vector<std::vector<std::string>> signRows;
    for (int k = 0; k < n; ++k) {
        int s = poincare_duality_sign(n, k);
        selfAdjoint = selfAdjoint && s != 0;
        signRows.push_back({std::to_string(k),
                            s == 0 ? "none" : (s > 0 ? "+1" : "-1")});
    }
    add_check(r, "adjoint of d_r is the star conjugate of d_{n-1-r} up to sign",
              selfAdjoint);
    r.sections.push_back(table_section("duality signs",
                                       {"r", "sign"}, std::move(signRows)));

    bool starInvolution = true;
    for (int k = 0; k <= n; ++k) {
        RatMatrix square =
            hodge_star_matrix(n, n - k) * hodge_star_matrix(n, k);
        RatMatrix expect = RatMatrix::identity(binom(n, k));
        if ((k * (n - k)) % 2 == 1)
            for (int i = 0; i < expect.rows(); ++i)
                expect.at(i, i) = -1;
        starInvolution = starInvolution && square == expect;
    }
    add_check(r, "star composed with star is (-1)^{r(n-r)} identity",
              starInvolution);

    for (int k = 0; k < n; ++k)
        r.sections.push_back(operator_section(
            "exterior derivative on " + std::to_string(k) + "-forms",
            d[static_cast<size_t>(k)]));
}

}  // namespace

// ---------------------------------------------------------------------------
// Report plumbing.

bool Report::verdict() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

std::string Report::first_failing() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return name;
    return "";
}

nlohmann::ordered_json Report::to_json() const {
    ordered_json j;
    j["schema"] = "jsk-1";
    j["scenario"] = scenario;
    j["params"] = params.is_null() ? ordered_json::object() : params;
    j["verdict"] = verdict();
    ordered_json cs = ordered_json::array();
    for (const auto& [name, pass] : checks) {
        ordered_json c;
        c["name"] = name;
        c["pass"] = pass;
        cs.push_back(std::move(c));
    }
    j["checks"] = std::move(cs);
    ordered_json ss = ordered_json::array();
    for (const ReportSection& s : sections) {
        ordered_json sec;
        sec["title"] = s.title;
        sec["kind"] = s.kind;
        sec["payload"] = s.payload;
        ss.push_back(std::move(sec));
    }
    j["sections"] = std::move(ss);
    return j;
}

std::string Report::render_text() const {
    std::ostringstream out;
    out << "scenario: " << scenario << "\n";
    std::string paramLine;
    if (!params.is_null())
        for (const auto& [key, value] : params.items()) {
            if (!paramLine.empty()) paramLine += "  ";
            paramLine += key + "=";
            paramLine += value.is_string() ? value.get<std::string>()
                                           : value.dump();
        }
    out << "params: " << (paramLine.empty() ? "(none)" : paramLine) << "\n";
    for (const ReportSection& s : sections) {
        out << "\n== " << s.title << " ==\n";
        for (const std::string& line : s.lines) out << line << "\n";
    }
    out << "\nchecks:\n";
    size_t passed = 0;
    for (const auto& [name, pass] : checks) {
        out << "  " << (pass ? "✓" : "✗") << " " << name << "\n";
        if (pass) ++passed;
    }
    out << "\nverdict: ";
    if (verdict()) {
        out << "PASS (" << passed << "/" << checks.size() << " checks)\n";
    } else {
        out << "FAIL (" << passed << "/" << checks.size()
            << " checks passed; first failing: " << first_failing() << ")\n";
    }
    return out.str();
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {
        "affine",        "cosserat1d", "killing2", "cosserat2",
        "airy",          "counts",     "conformal", "maurer-cartan",
        "gauging",       "elations-em", "poincare"};
    return names;
}

namespace {

// Option admission per scenario; unset means the scenario rejects the option.
struct ParamRule {
    bool allowN = false, allowDegree = false, allowSignature = false,
         usesSeed = false;
};

ParamRule rule_for(const std::string& name) {
    if (name == "counts") return {true, false, false, false};
    if (name == "conformal") return {true, true, true, false};
    if (name == "poincare") return {true, true, false, false};
    if (name == "maurer-cartan") return {false, false, false, true};
    if (name == "elations-em") return {true, false, true, true};
    return {};
}

void reject_unknown_params(const ScenarioSpec& spec, const ParamRule& rule) {
    if (spec.n && !rule.allowN)
        throw UsageError("scenario '" + spec.name + "' does not take --n");
    if (spec.degreeBound && !rule.allowDegree)
        throw UsageError("scenario '" + spec.name +
                         "' does not take --degree-bound");
    if (spec.signature && !rule.allowSignature)
        throw UsageError("scenario '" + spec.name +
                         "' does not take --signature");
}

}  // namespace

Report run_scenario(const ScenarioSpec& spec) {
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), spec.name) == names.end())
        throw UsageError("unknown scenario '" + spec.name + "'");
    reject_unknown_params(spec, rule_for(spec.name));

    Report r;
    r.scenario = spec.name;
    r.params = ordered_json::object();
    std::uint64_t seed = spec.seed.value_or(kDefaultSeed);

    if (spec.name == "affine") {
        scenario_affine(r);
    } else if (spec.name == "cosserat1d") {
        scenario_cosserat1d(r);
    } else if (spec.name == "killing2") {
        scenario_killing2(r);
    } else if (spec.name == "cosserat2") {
        scenario_cosserat2(r);
    } else if (spec.name == "airy") {
        scenario_airy(r);
    } else if (spec.name == "counts") {
        int n = spec.n.value_or(4);
        if (n > 6)
            throw UsageError("n must be between 2 and 6 for the counts scenario");
        r.params["n"] = n;
        scenario_counts(r, n);
    } else if (spec.name == "conformal") {
        int n = spec.n.value_or(4);
        if (n < 2 || n > 4) throw UsageError("n must be between 2 and 4");
        int degree = spec.degreeBound.value_or(2);
        if (degree < 2) throw UsageError("degree bound must be >= 2");
        std::string signature = spec.signature.value_or("minkowski");
        metric_for(signature, n);  // validates the name
        r.params["n"] = n;
        r.params["degreeBound"] = degree;
        r.params["signature"] = signature;
        scenario_conformal(r, n, degree, signature);
    } else if (spec.name == "maurer-cartan") {
        r.params["seed"] = seed;
        scenario_maurer_cartan(r, seed);
    } else if (spec.name == "gauging") {
        scenario_gauging(r);
    } else if (spec.name == "elations-em") {
        int n = spec.n.value_or(4);
        if (n != 4) throw UsageError("n must be 4 for the elation scenario");
        std::string signature = spec.signature.value_or("minkowski");
        metric_for(signature, 4);
        r.params["n"] = n;
        r.params["signature"] = signature;
        r.params["seed"] = seed;
        scenario_elations(r, signature, seed);
    } else if (spec.name == "poincare") {
        int n = spec.n.value_or(3);
        if (n < 2 || n > 4) throw UsageError("n must be between 2 and 4");
        int degree = spec.degreeBound.value_or(2);
        if (degree < 1) throw UsageError("degree bound must be >= 1");
        r.params["n"] = n;
        r.params["degreeBound"] = degree;
        scenario_poincare(r, n, degree);
    }
    return r;
}

Report operator_report(const LinearDiffOp& op, const std::string& mode,
                       const std::optional<LinearDiffOp>& with,
                       std::optional<int> degreeBound) {
    Report r;
    r.scenario = "op";
    r.params = ordered_json::object();
    r.params["mode"] = mode;
    r.sections.push_back(operator_section("input operator", op));

    if (mode == "cc") {
        CompatibilityResult c = compatibility_conditions(op);
        r.sections.push_back(
            operator_section("compatibility conditions", c.cc));
        add_check(r, "conditions compose to zero on the input",
                  compose(c.cc, op).is_zero());
        add_check(r, "conditions generate every annihilating covector",
                  check_exactness_pair(op, c.cc));
    } else if (mode == "adjoint") {
        LinearDiffOp adj = adjoint(op);
        r.sections.push_back(operator_section("formal adjoint", adj));
        add_check(r, "adjoint is an involution", adjoint(adj) == op);
        Rng rng(kDefaultSeed);
        Section lambda = rng.section(op.vars(), op.target_comps(), 2, 2);
        Section xi = rng.section(op.vars(), op.source_comps(), 2, 2);
        add_check(r, "integration-by-parts residual vanishes",
                  greens_identity(op, lambda, xi).holds());
    } else if (mode == "solutions") {
        int bound = degreeBound.value_or(2);
        if (bound < 0) throw UsageError("degree bound must be >= 0");
        r.params["degreeBound"] = bound;
        SolutionBasis sb = polynomial_solutions(op, bound);
        ordered_json payload;
        payload["degreeBound"] = bound;
        payload["dimension"] = sb.basis.size();
        ordered_json basis = ordered_json::array();
        std::vector<std::string> lines;
        lines.push_back("dimension at degree bound " + std::to_string(bound) +
                        ": " + std::to_string(sb.basis.size()));
        bool allSolve = true;
        for (const Section& s : sb.basis) {
            ordered_json comps = ordered_json::array();
            std::string line = "  (";
            for (int j = 0; j < s.size(); ++j) {
                comps.push_back(s.comps[static_cast<size_t>(j)].str());
                if (j) line += ", ";
                line += s.comps[static_cast<size_t>(j)].str();
            }
            line += ")";
            basis.push_back(std::move(comps));
            lines.push_back(std::move(line));
            allSolve = allSolve && apply(op, s).is_zero();
        }
        payload["basis"] = std::move(basis);
        r.sections.push_back(
            {"polynomial solutions", "solutions", std::move(payload),
             std::move(lines)});
        add_check(r, "every basis element solves the system", allSolve);
    } else if (mode == "parametrize") {
        if (!with)
            throw UsageError("mode parametrize requires --with <operator file>");
        if (with->vars() != op.vars() ||
            with->target_comps() != op.source_comps())
            throw UsageError(
                "parametrization must land in the source of the operator");
        r.sections.push_back(
            operator_section("candidate parametrization", *with));
        add_check(r, "operator composes to zero with the parametrization",
                  compose(op, *with).is_zero());
        add_check(r, "operator generates all compatibility conditions of the "
                     "parametrization",
                  check_parametrization(op, *with));
    } else {
        throw UsageError("unknown mode '" + mode +
                         "' (expected cc, adjoint, solutions or parametrize)");
    }
    return r;
}

}  // namespace jsk
