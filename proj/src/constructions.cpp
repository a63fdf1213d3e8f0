#include "sdc/constructions.hpp"

#include <array>

namespace sdc {

std::string_view construction_name(Construction c) {
    switch (c) {
        case Construction::GoethalsSeidel: return "GS";
        case Construction::I: return "I";
        case Construction::II: return "II";
    }
    return "?";
}

Construction parse_construction(std::string_view name) {
    if (name == "GS") return Construction::GoethalsSeidel;
    if (name == "I") return Construction::I;
    if (name == "II") return Construction::II;
    throw ParseError("unknown construction '" + std::string(name) + "'", 0);
}

void CirculantQuad::validate() const {
    if (n == 0) throw DomainError("block size must be positive");
    if (lambda.ring != ring) throw DomainError("lambda is over a different ring");
    if (!is_unit(lambda)) throw DomainError("lambda '" + lambda.str() + "' is not a unit");
    const RingVector* rows[] = {&a, &b, &c, &d};
    const char* names = "ABCD";
    for (int i = 0; i < 4; ++i) {
        if (rows[i]->ring() != ring) throw DomainError(std::string("row ") + names[i] + " is over a different ring");
        if (rows[i]->size() != n)
            throw DomainError(std::string("row ") + names[i] + " has length " + std::to_string(rows[i]->size()) +
                              ", expected " + std::to_string(n));
    }
}

QuadBlocks expand(const CirculantQuad& q) {
    q.validate();
    return {lambda_circulant(q.a, q.lambda, q.shift), lambda_circulant(q.b, q.lambda, q.shift),
            lambda_circulant(q.c, q.lambda, q.shift), lambda_circulant(q.d, q.lambda, q.shift),
            back_diagonal(q.n, q.ring)};
}

std::string ConditionReport::summary() const {
    if (ok()) return "conditions hold";
    std::string s = "conditions failed:";
    for (const auto& [name, m] : residuals) {
        std::size_t nonzero = 0;
        for (auto e : m.data()) nonzero += e != 0;
        s += " " + name + " (" + std::to_string(nonzero) + " nonzero entries)";
    }
    return s;
}

namespace {

RingMatrix gram_residual(const QuadBlocks& m) {
    const auto gram = m.a * m.a.transpose() + m.b * m.b.transpose() + m.c * m.c.transpose() + m.d * m.d.transpose();
    return gram + RingMatrix::identity(gram.ring(), gram.rows());
}

void record(ConditionReport& rep, bool& flag, const char* name, RingMatrix residual) {
    if (residual.is_zero()) return;
    flag = false;
    rep.residuals.emplace_back(name, std::move(residual));
}

}  // namespace

ConditionReport check_conditions_I(const CirculantQuad& q) {
    const QuadBlocks m = expand(q);
    ConditionReport rep;
    rep.gram_ok = rep.skew_ok = true;
    record(rep, rep.gram_ok, "AA^T+BB^T+CC^T+DD^T+I", gram_residual(m));
    record(rep, rep.skew_ok, "AB^T-BA^T-CD^T+DC^T",
           m.a * m.b.transpose() - m.b * m.a.transpose() - m.c * m.d.transpose() + m.d * m.c.transpose());
    return rep;
}

ConditionReport check_conditions_II(const CirculantQuad& q) {
    const Ring r(q.ring);
    if (q.lambda.ring != q.ring || r.mul(q.lambda.value, q.lambda.value) != 1)
        throw DomainError("construction II needs lambda^2 = 1, lambda = '" + q.lambda.str() + "'");
    const QuadBlocks m = expand(q);
    ConditionReport rep;
    rep.gram_ok = rep.skew_ok = true;
    record(rep, rep.gram_ok, "AA^T+BB^T+CC^T+DD^T+I", gram_residual(m));
    record(rep, rep.skew_ok, "CD^T-DC^T", m.c * m.d.transpose() - m.d * m.c.transpose());
    const auto cr = m.c * m.r;
    const auto dr = m.d * m.r;
    record(rep, rep.skew_ok, "-ADR+BCR-CRB+DRA", -(m.a * dr) + m.b * cr - cr * m.b + dr * m.a);
    return rep;
}

ConditionReport check_conditions_GS(const CirculantQuad& q) {
    const QuadBlocks m = expand(q);
    ConditionReport rep;
    rep.gram_ok = rep.skew_ok = true;
    record(rep, rep.gram_ok, "AA^T+BB^T+CC^T+DD^T+I", gram_residual(m));
    return rep;
}

ConditionReport check_conditions(Construction kind, const CirculantQuad& q) {
    switch (kind) {
        case Construction::I: return check_conditions_I(q);
        case Construction::II: return check_conditions_II(q);
        case Construction::GoethalsSeidel: return check_conditions_GS(q);
    }
    throw DomainError("unknown construction");
}

RingMatrix construction_block_array(Construction kind, const QuadBlocks& m) {
    const auto& A = m.a;
    const auto& B = m.b;
    const auto& R = m.r;
    const auto CR = m.c * R;
    const auto DR = m.d * R;
    std::array<std::array<RingMatrix, 4>, 4> g;
    switch (kind) {
        case Construction::I:
            g = {{{A, B, CR, DR}, {-B, A, DR, -CR}, {-CR, -DR, A, B}, {-DR, CR, -B, A}}};
            break;
        case Construction::II: {
            const auto Bt = B.transpose();
            const auto At = A.transpose();
            g = {{{A, B, CR, DR}, {-Bt, At, DR, -CR}, {-CR, -DR, A, B}, {-DR, CR, -Bt, At}}};
            break;
        }
        case Construction::GoethalsSeidel: {
            const auto BR = B * R;
            const auto CtR = m.c.transpose() * R;
            const auto DtR = m.d.transpose() * R;
            const auto BtR = B.transpose() * R;
            g = {{{A, BR, CR, DR}, {-BR, A, DtR, -CtR}, {-CR, -DtR, A, BtR}, {-DR, CtR, -BtR, A}}};
            break;
        }
    }
    const std::size_t n = A.rows();
    RingMatrix out(A.ring(), 4 * n, 4 * n);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out.place(g[i][j], i * n, j * n);
    return out;
}

RingMatrix build(Construction kind, const CirculantQuad& q, bool verify) {
    if (verify) {
        auto rep = check_conditions(kind, q);
        if (!rep.ok())
            throw ConstructionError(std::string("construction ") + std::string(construction_name(kind)) + ": " +
                                        rep.summary(),
                                    std::move(rep));
    }
    const RingMatrix m = construction_block_array(kind, expand(q));
    RingMatrix g(q.ring, 4 * q.n, 8 * q.n);
    g.place(RingMatrix::identity(q.ring, 4 * q.n), 0, 0);
    g.place(m, 0, 4 * q.n);
    return g;
}

RingMatrix build_construction_I(const CirculantQuad& q, bool verify) { return build(Construction::I, q, verify); }
RingMatrix build_construction_II(const CirculantQuad& q, bool verify) { return build(Construction::II, q, verify); }
RingMatrix build_goethals_seidel(const CirculantQuad& q, bool verify) {
    return build(Construction::GoethalsSeidel, q, verify);
}

}  // namespace sdc
