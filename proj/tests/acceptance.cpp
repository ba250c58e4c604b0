// Acceptance suite: one pass/fail line per criterion. Usage:
//   acceptance <cli-binary> <fixtures-dir>
// Exit status is the number of failed criteria.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "screw/control.hpp"
#include "screw/involution.hpp"
#include "screw/pinv.hpp"
#include "screw/se3.hpp"
#include "screw/systems.hpp"

#include "helpers.hpp"

using namespace screw;
using R = Rat;

namespace {

std::string g_cli;
std::string g_fixtures;

// ---------------------------------------------------------------- utilities

int run_cli(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    if (raw == -1) return -1;
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// Columns given as (w1,w2,w3; v1,v2,v3) rows, one per screw.
template <class S>
Matrix<S> screws(const std::vector<std::array<S, 6>>& rows) {
    Matrix<S> m(6, rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t i = 0; i < 6; ++i) m(i, c) = rows[c][i];
    return m;
}

Matrix<R> arm_jacobian() {
    return screws<R>({{R(1), R(0), R(0), R(0), R(-1), R(1, 2)},
                      {R(0), R(0), R(1), R(0), R(0), R(0)},
                      {R(0), R(0), R(1), R(-2), R(1), R(0)}});
}

template <class S>
double col_norm(const Matrix<S>& m) {
    double s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double v = ScalarTraits<S>::to_double(m(i, 0));
        s += v * v;
    }
    return std::sqrt(s);
}

struct Check {
    bool ok = true;
    std::string why;
    void fail(const std::string& msg) {
        if (ok) why = msg;
        ok = false;
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

// --------------------------------------------------------------- criteria

// 1. Planar arm: det pencil 8h; no J^{+0} (CLI exits 2); closed form of
//    J^{+h} entrywise at several pitches, axioms authoritative on the one
//    disputed entry (documented in the fixture).
void criterion1(Check& c) {
    const ScrewJacobian<R> j(arm_jacobian());
    const GramPencil<R> g = gram_pencil(j);
    c.expect(g.detpoly.coefficients() == std::vector<R>{R(0), R(8)}, "detpoly != 8h");

    c.expect(run_cli("pinv --input " + g_fixtures + "/planar_arm.json --h 0") == 2,
             "CLI exit at h=0 is not 2");
    c.expect(run_cli("pinv --input " + g_fixtures + "/planar_arm.json --h 1") == 0,
             "CLI exit at h=1 is not 0");

    for (const R& h : {R(1), R(-1), R(1, 2), R(3)}) {
        const auto res = h_pseudoinverse(j, Pitch<R>::finite(h));
        Matrix<R> want(3, 6);
        const R z(0);
        const R r16h = R(1) / (R(16) * h), r32h = R(1) / (R(32) * h), r8h = R(1) / (R(8) * h);
        const std::array<R, 6> row0{R(1), R(-1, 2), z, z, z, z};
        const std::array<R, 6> row1{R(3) * r16h, -(R(16) * h * h + R(16) * h + R(3)) * r32h,
                                    R(1), R(1, 2), z, R(-3) * r8h};
        const std::array<R, 6> row2{r16h, (R(16) * h * h + R(16) * h - R(1)) * r32h,
                                    z, R(-1, 2), z, -r8h};
        const std::array<std::array<R, 6>, 3> rows{row0, row1, row2};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 6; ++k)
                if (res.matrix(i, k) != rows[i][k]) c.fail("closed-form entry mismatch");
        const auto ax = verify_axioms(j, res);
        c.expect(ax[0] && ax[1] && ax[2] && ax[3], "axioms fail on closed form");
    }
}

// 2. RPP robot: projector entries exact at h in {1, 2}, independent of the
//    prismatic offset; kernel contains the three reciprocal twists.
void criterion2(Check& c) {
    for (const R& l : {R(1), R(2)}) {
        const ScrewJacobian<R> j(screws<R>({{R(0), R(0), R(1), R(0), R(0), R(0)},
                                            {R(1), R(0), R(0), R(0), R(0), R(0)},
                                            {R(1), R(0), R(0), R(0), R(0), -l}}));
        for (const R& h : {R(1), R(2)}) {
            const Projector<R> p = projector_h(j, Pitch<R>::finite(h));
            Matrix<R> want(6, 6);
            want(0, 0) = R(1);
            want(0, 3) = R(-1) / (R(2) * h);
            want(2, 2) = R(1);
            want(5, 5) = R(1);
            if (!(p.matrix == want)) c.fail("projector matrix mismatch");
            const std::vector<Twist<R>> kernel{
                Twist<R>(R(0), R(1), R(0), R(0), R(0), R(0)),
                Twist<R>(R(0), R(0), R(0), R(0), R(1), R(0)),
                Twist<R>(R(1), R(0), R(0), R(2) * h, R(0), R(0))};
            for (const auto& z : kernel) {
                const Matrix<R> pz = p.matrix * z.to_column();
                for (std::size_t i = 0; i < 6; ++i)
                    if (pz(i, 0) != R(0)) c.fail("projector kernel twist not annulled");
            }
        }
    }
}

// 3. Rate task: resolved joint rates and residual cost in closed form;
//    the cost vanishes at the two roots of 80h^2 + 64h - 25.
void criterion3(Check& c) {
    const ScrewJacobian<R> j(arm_jacobian());
    const Twist<R> s(R(0), R(3, 5), R(4, 5), R(1), R(-4, 5), R(3, 5));
    for (const R& h : {R(1), R(-1), R(1, 2)}) {
        const auto res = h_pseudoinverse(j, Pitch<R>::finite(h));
        const Matrix<R> x = res.matrix * s.to_column();
        const R k = R(1) / (R(160) * h);
        const std::array<R, 3> v{k * (R(-48) * h),
                                 k * (R(-48) * h * h + R(160) * h - R(45)),
                                 k * (R(48) * h * h - R(32) * h - R(15))};
        for (std::size_t i = 0; i < 3; ++i)
            if (x(i, 0) != v[i]) c.fail("joint-rate closed form mismatch");
        const auto cost = cost_phi(j, s, x, Pitch<R>::finite(h));
        // factor is exactly 1: Phi_h = -9(80h^2 + 64h - 25)/(800h)
        const R phi = R(-9) * (R(80) * h * h + R(64) * h - R(25)) / (R(800) * h);
        c.expect(cost.value == phi, "residual cost mismatch");
        if (h == R(1)) c.expect(cost.value == R(-1071, 800), "Phi_1 != -1071/800");
    }
    // float mode at the two real roots of 80h^2 + 64h - 25
    const Matrix<double> jd = testgen::to_double(arm_jacobian());
    const ScrewJacobian<double> jf(jd);
    const Twist<double> sf(0.0, 0.6, 0.8, 1.0, -0.8, 0.6);
    const double disc = std::sqrt(64.0 * 64.0 + 4.0 * 80.0 * 25.0);
    for (const double root : {(-64.0 + disc) / 160.0, (-64.0 - disc) / 160.0}) {
        const auto res = h_pseudoinverse(jf, Pitch<double>::finite(root));
        const Matrix<double> x = res.matrix * sf.to_column();
        const auto cost = cost_phi(jf, sf, x, Pitch<double>::finite(root));
        c.expect(std::abs(cost.value) < 1e-9, "cost does not vanish at pencil root");
    }
}

// 4. Random rational Jacobians: the four axioms hold exactly whenever the
//    existence test passes; rank-6 Jacobians give the h-independent
//    Moore-Penrose inverse.
void criterion4(Check& c) {
    std::mt19937 rng(411);
    std::uniform_int_distribution<std::size_t> mdist(1, 5);
    int verified = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t m = mdist(rng);
        const ScrewJacobian<R> j(testgen::full_column_rank_matrix(rng, 6, m));
        for (int k = 0; k < 5; ++k) {
            const Pitch<R> h = Pitch<R>::finite(testgen::rat(rng, -5, 5, 3));
            if (!exists_h_pinv(j, h)) continue;
            const auto res = h_pseudoinverse(j, h);
            const auto ax = verify_axioms(j, res);
            if (!(ax[0] && ax[1] && ax[2] && ax[3])) c.fail("axiom violated on random case");
            ++verified;
        }
    }
    c.expect(verified > 1500, "too few random cases exercised");
    for (int t = 0; t < 20; ++t) {
        const Matrix<R> j6 = testgen::invertible_matrix(rng, 6);
        const ScrewJacobian<R> j(j6);
        const Matrix<R> mp = inverse(j6); // Moore-Penrose of an invertible matrix
        for (const R& h : {R(0), R(1), R(-3), R(2, 7)}) {
            const auto res = h_pseudoinverse(j, Pitch<R>::finite(h));
            if (!(res.matrix == mp)) c.fail("rank-6 inverse depends on h");
        }
    }
}

// 5. Classification is invariant under rigid displacements and basis changes
//    for every 2- and 3-system normal form, moduli multiset included; float
//    classification agrees within 1e-8.
void criterion5(Check& c) {
    std::mt19937 rng(520);
    const std::vector<R> mods{R(-1), R(0), R(1, 2), R(2)};
    std::vector<ScrewSystem<R>> forms;
    auto add = [&](const std::vector<std::array<R, 6>>& rows) {
        forms.emplace_back(ScrewJacobian<R>(screws<R>(rows)));
    };
    const R z(0), one(1);
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = a + 1; b < mods.size(); ++b)
            add({{one, z, z, mods[a], z, z}, {z, one, z, z, mods[b], z}}); // IA
    for (const R& p : mods) add({{one, z, z, z, z, z}, {z, z, z, one, p, z}}); // IB
    for (const R& h : mods) {
        add({{one, z, z, h, z, z}, {z, one, z, z, h, z}});                // IIA
        add({{one, z, z, h, z, z}, {z, z, z, z, one, z}});                // IIB
    }
    add({{z, z, z, one, z, z}, {z, z, z, z, one, z}});                    // IIC
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = a + 1; b < mods.size(); ++b)
            for (std::size_t d = b + 1; d < mods.size(); ++d)
                add({{one, z, z, mods[a], z, z},
                     {z, one, z, z, mods[b], z},
                     {z, z, one, z, z, mods[d]}});                        // IA1
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = 0; b < mods.size(); ++b) {
            if (a == b) continue;
            add({{one, z, z, mods[a], z, z},
                 {z, one, z, z, mods[b], z},
                 {z, z, one, z, z, mods[b]}});                            // IA2
        }
    for (const R& h : mods) {
        add({{one, z, z, h, z, z}, {z, one, z, z, h, z}, {z, z, z, one, z, R(1)}}); // IB0
        add({{one, z, z, h, z, z}, {z, one, z, z, h, z}, {z, z, z, z, z, one}});    // IIB
        add({{one, z, z, h, z, z}, {z, one, z, z, h, z}, {z, z, one, z, z, h}});    // IIA
        add({{one, z, z, h, z, z}, {z, z, z, z, one, z}, {z, z, z, z, z, one}});    // IIC
    }
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = a + 1; b < mods.size(); ++b)
            add({{one, z, z, mods[a], z, z},
                 {z, one, z, z, mods[b], z},
                 {z, z, z, z, z, one}});                                  // IB3
    add({{one, z, z, z, z, z}, {z, z, z, z, one, z}, {z, z, z, one, z, R(1)}}); // IC
    add({{z, z, z, one, z, z}, {z, z, z, z, one, z}, {z, z, z, z, z, one}});    // IID

    int transforms = 0;
    for (const auto& s : forms) {
        const GHClass<R> base = classify(s.basis().matrix().cols() <= 3
                                             ? s
                                             : s); // all forms here are m <= 3
        for (int t = 0; t < 2; ++t) {
            const Matrix<R> ad = adjoint_matrix(testgen::rigid(rng));
            const Matrix<R> bchg =
                testgen::invertible_matrix(rng, s.basis().matrix().cols(), -2, 2);
            const ScrewSystem<R> moved{ScrewJacobian<R>(ad * s.basis().matrix() * bchg)};
            const GHClass<R> cls = classify(moved);
            if (!cls.same_class(base)) c.fail("class changed under " + base.label());
            // float-mode agreement within 1e-8
            const ScrewSystem<double> movedf{
                ScrewJacobian<double>(testgen::to_double(moved.basis().matrix()))};
            const GHClass<double> clsf = classify(movedf);
            if (clsf.label() != base.label()) c.fail("float label disagrees: " + base.label());
            if (clsf.moduli.size() != base.moduli.size()) {
                c.fail("float moduli count disagrees: " + base.label());
            } else {
                for (std::size_t i = 0; i < clsf.moduli.size(); ++i)
                    if (std::abs(clsf.moduli[i] - ScalarTraits<R>::to_double(base.moduli[i])) >
                        1e-8)
                        c.fail("float modulus off: " + base.label());
            }
            ++transforms;
        }
    }
    c.expect(transforms >= 100, "fewer than 100 transform checks");

    // pitch, pairing and involution invariance under displacement
    for (int t = 0; t < 25; ++t) {
        const RigidDisplacement<R> g = testgen::rigid(rng);
        const Twist<R> s1 = testgen::twist(rng), s2 = testgen::twist(rng);
        const Pitch<R> h = Pitch<R>::finite(testgen::rat(rng));
        if (pairing(adjoint_action(g, s1), adjoint_action(g, s2), h) != pairing(s1, s2, h))
            c.fail("pairing not invariant");
        if (!vec_is_zero(s1.omega)) {
            const Pitch<R> p0 = pitch(s1), p1 = pitch(adjoint_action(g, s1));
            if (p0.is_infinite() != p1.is_infinite() ||
                (!p0.is_infinite() && p0.value() != p1.value()))
                c.fail("pitch not invariant");
        }
        const std::vector<Twist<R>> ib3{Twist<R>(R(1), R(0), R(0), R(0), R(0), R(0)),
                                        Twist<R>(R(1), R(0), R(0), R(0), R(0), R(-1)),
                                        Twist<R>(R(0), R(1), R(0), R(-1), R(0), R(0))};
        std::vector<Twist<R>> moved;
        for (const auto& l : ib3) moved.push_back(adjoint_action(g, l));
        if (!is_in_involution(LineSet<R>(moved)).in_involution)
            c.fail("involution not invariant");
    }
}

// 6. Each family with identically-zero pencil determinant: no h-pseudoinverse
//    at any pitch, the recorded reciprocal basis pairs to zero exactly, and
//    existence transfers to the reciprocal system in both directions.
void criterion6(Check& c) {
    const R z(0), one(1);
    struct Row {
        std::vector<std::array<R, 6>> gens;
        std::vector<std::array<R, 6>> rec; // 0-reciprocal generators
    };
    auto rows_for = [&](const R& p) {
        std::vector<Row> rows;
        rows.push_back({{{z, z, z, one, z, z}},
                        {{z, one, z, z, z, z},
                         {z, z, one, z, z, z},
                         {z, z, z, one, z, z},
                         {z, z, z, z, one, z},
                         {z, z, z, z, z, one}}});
        rows.push_back({{{one, z, z, p, z, z}, {z, z, z, z, one, z}},
                        {{one, z, z, -p, z, z},
                         {z, z, one, z, z, z},
                         {z, z, z, z, one, z},
                         {z, z, z, z, z, one}}});
        rows.push_back({{{z, z, z, one, z, z}, {z, z, z, z, one, z}},
                        {{z, z, one, z, z, z},
                         {z, z, z, one, z, z},
                         {z, z, z, z, one, z},
                         {z, z, z, z, z, one}}});
        rows.push_back({{{one, z, z, p, z, z}, {z, one, z, z, -p, z}, {z, z, z, z, z, one}},
                        {{one, z, z, -p, z, z}, {z, one, z, z, p, z}, {z, z, z, z, z, one}}});
        rows.push_back({{{one, z, z, z, z, z}, {z, z, z, z, one, z}, {z, z, z, one, z, p}},
                        {{-p, z, one, z, z, z}, {z, z, z, z, one, z}, {z, z, z, z, z, one}}});
        rows.push_back({{{one, z, z, p, z, z}, {z, one, z, z, p, z}, {z, z, z, z, z, one}},
                        {{one, z, z, -p, z, z}, {z, one, z, z, -p, z}, {z, z, z, z, z, one}}});
        rows.push_back({{{one, z, z, p, z, z}, {z, z, z, z, one, z}, {z, z, z, z, z, one}},
                        {{one, z, z, -p, z, z}, {z, z, z, z, one, z}, {z, z, z, z, z, one}}});
        return rows;
    };
    for (const R& p : {R(1), R(2)}) {
        for (const Row& row : rows_for(p)) {
            const ScrewSystem<R> s{ScrewJacobian<R>(screws<R>(row.gens))};
            c.expect(no_pinv_for_all_h(s), "pencil determinant not identically zero");
            const Matrix<R> rec = screws<R>(row.rec);
            // recorded reciprocal pairs to zero with every generator, exactly
            for (std::size_t i = 0; i < row.gens.size(); ++i)
                for (std::size_t k = 0; k < row.rec.size(); ++k) {
                    const R pr = pairing(Twist<R>::from_column(s.basis().matrix().column(i)),
                                         Twist<R>::from_column(rec.column(k)),
                                         Pitch<R>::finite(R(0)));
                    if (pr != R(0)) c.fail("recorded reciprocal basis does not annul");
                }
            // same span as the computed 0-reciprocal
            const ReciprocalBasis<R> computed = reciprocal_system(s, Pitch<R>::finite(R(0)));
            c.expect(computed.basis.cols() == rec.cols(), "reciprocal dimension mismatch");
            c.expect(rank(Matrix<R>::hcat(computed.basis, rec)) == rec.cols(),
                     "reciprocal span mismatch");
            // existence transfers: S has no h-pinv, so neither has S^{perp h}
            for (const R& h : {R(0), R(1), R(-2), R(1, 3)}) {
                const Pitch<R> ph = Pitch<R>::finite(h);
                c.expect(!exists_h_pinv(s.basis(), ph), "unexpected pseudoinverse");
                const ScrewJacobian<R> recj(reciprocal_system(s, ph).basis);
                c.expect(!exists_h_pinv(recj, ph), "reciprocal has pseudoinverse");
            }
        }
    }
    // and the positive direction on random systems
    std::mt19937 rng(66);
    std::uniform_int_distribution<std::size_t> mdist(1, 5);
    for (int t = 0; t < 60; ++t) {
        const ScrewJacobian<R> j(testgen::full_column_rank_matrix(rng, 6, mdist(rng)));
        const Pitch<R> h = Pitch<R>::finite(testgen::rat(rng, -4, 4, 2));
        const ScrewJacobian<R> recj(reciprocal_system(ScrewSystem<R>{j}, h).basis);
        if (exists_h_pinv(j, h) != exists_h_pinv(recj, h))
            c.fail("existence does not transfer to the reciprocal");
    }
}

// 7. Sylvester factorisation identities exactly on random lines; the six
//    three-line geometric arrangements classify as expected with zero modulus.
void criterion7(Check& c) {
    std::mt19937 rng(77);
    for (int t = 0; t < 500; ++t) {
        std::vector<Twist<R>> ls;
        const std::size_t m = (t % 2) ? 2 : 3;
        for (std::size_t i = 0; i < m; ++i) ls.push_back(testgen::line(rng));
        const LineSet<R> lines(ls);
        const auto [det, prod] = sylvester_factor_identity(lines);
        if (det != prod) c.fail("factor identity violated");
    }
    struct Case {
        std::vector<Twist<R>> lines;
        std::string name;
    };
    const std::vector<Case> cases{
        {{Twist<R>(R(1), R(0), R(0), R(0), R(0), R(0)),
          Twist<R>(R(0), R(1), R(1), R(0), R(1), R(-1)),
          Twist<R>(R(1), R(1), R(-1), R(0), R(1), R(1))},
         "IA-zero-pitch"},
        {{Twist<R>(R(1), R(0), R(0), R(0), R(-1), R(1, 2)),
          Twist<R>(R(0), R(0), R(1), R(0), R(0), R(0)),
          Twist<R>(R(0), R(0), R(1), R(-2), R(1), R(0))},
         "IB0-zero"},
        {{Twist<R>(R(1), R(0), R(0), R(0), R(0), R(0)),
          Twist<R>(R(1), R(0), R(0), R(0), R(0), R(-1)),
          Twist<R>(R(0), R(1), R(0), R(-1), R(0), R(0))},
         "IB3"},
        {{Twist<R>(R(1), R(0), R(0), R(0), R(0), R(0)),
          Twist<R>(R(0), R(1), R(0), R(0), R(0), R(0)),
          Twist<R>(R(0), R(0), R(1), R(0), R(0), R(0))},
         "IIA-zero"},
        {{Twist<R>(R(1), R(0), R(0), R(0), R(0), R(0)),
          Twist<R>(R(0), R(1), R(0), R(0), R(0), R(0)),
          Twist<R>(R(-1), R(1), R(0), R(0), R(0), R(1))},
         "IIB-zero"},
        {{Twist<R>(R(1), R(0), R(0), R(0), R(0), R(0)),
          Twist<R>(R(1), R(0), R(0), R(0), R(0), R(1)),
          Twist<R>(R(1), R(0), R(0), R(0), R(-1), R(0))},
         "IIC-zero"}};
    for (const Case& k : cases) {
        const LineSet<R> lines(k.lines);
        const auto rep = is_in_involution(lines);
        if (!rep.in_involution) {
            c.fail(k.name + " not detected in involution");
            continue;
        }
        if (classify_involution_geometry(lines) != k.name)
            c.fail("geometric case mismatch for " + k.name);
        const GHClass<R> cls = classify(ScrewSystem<R>{lines.jacobian()});
        if (k.name == "IB3") {
            // the one arrangement without a zero modulus: the principal
            // pitches must instead have opposite signs
            c.expect(cls.moduli.size() == 2 && cls.moduli[0] * cls.moduli[1] < R(0),
                     "IB3 principal pitches not of opposite sign");
        } else {
            bool zero_mod = false;
            for (const R& v : cls.moduli)
                if (v == R(0)) zero_mod = true;
            c.expect(zero_mod, "no zero modulus for " + k.name);
        }
    }
}

// 8. Constructed singular pairs: the Gram-kernel certificate lies in the
//    span, annuls every generator, and is h-self-reciprocal, exactly.
void criterion8(Check& c) {
    std::mt19937 rng(88);
    std::uniform_int_distribution<std::size_t> mdist(2, 5);
    int built = 0;
    while (built < 200) {
        const R h = testgen::rat(rng, -4, 4, 2);
        const Pitch<R> ph = Pitch<R>::finite(h);
        // z on the null cone of Q_h: <z, z>_h = -2h + 2 v1 = 0
        const Twist<R> zt(R(1), R(0), R(0), h, testgen::rat(rng), testgen::rat(rng));
        const Matrix<R> ann = null_space(zt.to_column().transpose() * q_matrix(ph));
        const std::size_t m = mdist(rng);
        Matrix<R> j(6, m);
        j.set_column(0, zt.to_column());
        for (std::size_t col = 1; col < m; ++col) {
            Matrix<R> mix(6, 1);
            for (std::size_t b = 0; b < ann.cols(); ++b) {
                const R w = testgen::rat(rng, -3, 3, 1);
                for (std::size_t i = 0; i < 6; ++i) mix(i, 0) = mix(i, 0) + w * ann(i, b);
            }
            j.set_column(col, mix.column(0));
        }
        if (rank(j) != m) continue;
        ++built;
        const ScrewJacobian<R> jac(j);
        if (exists_h_pinv(jac, ph)) {
            c.fail("constructed pair unexpectedly admits a pseudoinverse");
            continue;
        }
        const GramPencil<R> g = gram_pencil(jac);
        const Matrix<R> kernel = null_space(g.at(h));
        if (kernel.cols() == 0) {
            c.fail("no Gram kernel on singular pair");
            continue;
        }
        const Matrix<R> zc = j * kernel.column(0);
        bool nonzero = false;
        for (std::size_t i = 0; i < 6; ++i) nonzero = nonzero || zc(i, 0) != R(0);
        c.expect(nonzero, "certificate must be nonzero");
        const Twist<R> cert = Twist<R>::from_column(zc);
        for (std::size_t col = 0; col < m; ++col)
            if (pairing(Twist<R>::from_column(j.column(col)), cert, ph) != R(0))
                c.fail("certificate does not annul a generator");
        c.expect(pairing(cert, cert, ph) == R(0), "certificate not h-self-reciprocal");
    }
}

// 9. Cost gradient: matches central finite differences in float mode and is
//    exactly zero at the resolved rates in rational mode.
void criterion9(Check& c) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> mdist(1, 5);
    int done = 0;
    while (done < 100) {
        const std::size_t m = mdist(rng);
        const Matrix<R> jr = testgen::full_column_rank_matrix(rng, 6, m);
        const ScrewJacobian<double> j(testgen::to_double(jr));
        const Pitch<double> h =
            Pitch<double>::finite(ScalarTraits<R>::to_double(testgen::rat(rng, -3, 3, 2)));
        Matrix<double> x(m, 1);
        for (std::size_t i = 0; i < m; ++i)
            x(i, 0) = ScalarTraits<R>::to_double(testgen::rat(rng, -3, 3, 2));
        const Twist<double> s = Twist<double>::from_column(
            testgen::to_double(testgen::twist(rng).to_column()));
        const auto eval = cost_phi(j, s, x, h);
        const double step = 1e-6;
        for (std::size_t i = 0; i < m; ++i) {
            Matrix<double> xp = x, xm = x;
            xp(i, 0) += step;
            xm(i, 0) -= step;
            const double num =
                (cost_phi(j, s, xp, h).value - cost_phi(j, s, xm, h).value) / (2 * step);
            const double denom = std::max(1.0, std::abs(eval.gradient(i, 0)));
            if (std::abs(num - eval.gradient(i, 0)) / denom > 1e-5)
                c.fail("gradient disagrees with finite differences");
        }
        ++done;
    }
    // exact stationarity at the resolved rates
    int exact = 0;
    while (exact < 40) {
        const std::size_t m = mdist(rng);
        const ScrewJacobian<R> j(testgen::full_column_rank_matrix(rng, 6, m));
        const Pitch<R> h = Pitch<R>::finite(testgen::rat(rng, -4, 4, 2));
        if (!exists_h_pinv(j, h)) continue;
        const Twist<R> s = testgen::twist(rng);
        const Matrix<R> x = h_pseudoinverse(j, h).matrix * s.to_column();
        const auto eval = cost_phi(j, s, x, h);
        for (std::size_t i = 0; i < m; ++i)
            if (eval.gradient(i, 0) != R(0)) c.fail("gradient not exactly zero at optimum");
        ++exact;
    }
}

// 10. Damped rates converge to the pseudoinverse rates as the damping fades.
void criterion10(Check& c) {
    std::mt19937 rng(1010);
    std::uniform_int_distribution<std::size_t> mdist(1, 5);
    int done = 0;
    while (done < 50) {
        const std::size_t m = mdist(rng);
        const Matrix<R> jr = testgen::full_column_rank_matrix(rng, 6, m);
        const ScrewJacobian<R> jrat(jr);
        const Pitch<R> hr = Pitch<R>::finite(testgen::rat(rng, -4, 4, 2));
        if (!exists_h_pinv(jrat, hr)) continue;
        const Twist<R> sr = testgen::twist(rng);
        // keep the Gram matrix well conditioned so the eps*I perturbation
        // bound, |x(eps) - x*| <= eps |G^{-1}| |x*| + O(eps^2), stays small
        const Matrix<R> ginv = inverse(generalized_adjoint(jrat, hr) * jrat.matrix());
        if (ginv.max_abs() > R(5)) continue;
        const Matrix<R> xr = h_pseudoinverse(jrat, hr).matrix * sr.to_column();
        if (xr.max_abs() > R(10)) continue;

        const ScrewJacobian<double> j(testgen::to_double(jr));
        const Pitch<double> h = Pitch<double>::finite(ScalarTraits<R>::to_double(hr.value()));
        const Twist<double> s = Twist<double>::from_column(testgen::to_double(sr.to_column()));
        const Matrix<double> xstar = testgen::to_double(xr);
        std::vector<double> gaps;
        for (const double eps : {1e-2, 1e-4, 1e-6}) {
            const Matrix<double> lambda = Matrix<double>::identity(m).scaled(eps);
            const Matrix<double> x = damped_solution(j, s, lambda, h).first;
            Matrix<double> diff(m, 1);
            for (std::size_t i = 0; i < m; ++i) diff(i, 0) = x(i, 0) - xstar(i, 0);
            gaps.push_back(col_norm(diff));
        }
        if (!(gaps[0] >= gaps[1] && gaps[1] >= gaps[2]))
            c.fail("damped gap not monotone decreasing");
        if (!(gaps[2] < 1e-5)) c.fail("damped gap does not close");
        ++done;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <fixtures-dir>\n";
        return 64;
    }
    g_cli = argv[1];
    g_fixtures = argv[2];

    struct Criterion {
        const char* what;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{
        {"planar arm: pencil 8h, no J^{+0}, closed form at four pitches", criterion1},
        {"RPP robot: exact projector and kernel at h in {1,2}", criterion2},
        {"rate task: closed-form rates and residual cost, roots vanish", criterion3},
        {"random Jacobians: axioms exact; rank 6 is h-independent", criterion4},
        {"normal forms invariant under displacement and basis change", criterion5},
        {"degenerate families: reciprocal bases and existence transfer", criterion6},
        {"Sylvester identities and the six geometric arrangements", criterion7},
        {"singular pairs carry an exact annulling certificate", criterion8},
        {"cost gradient: finite-difference match, exact stationarity", criterion9},
        {"damped rates converge to the pseudoinverse rates", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check chk;
        try {
            criteria[i].run(chk);
        } catch (const std::exception& e) {
            chk.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << (i + 1) << " (" << criteria[i].what << "): "
                  << (chk.ok ? "PASS" : "FAIL") << (chk.ok ? "" : " - " + chk.why) << "\n";
        if (!chk.ok) ++failures;
    }
    return failures;
}
