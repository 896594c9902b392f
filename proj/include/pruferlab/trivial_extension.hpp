#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"
#include "quotient.hpp"
#include "table_ring.hpp"

namespace pruferlab {

// The idealization A (+) E for E = (A/I)^r: pairs (a, e) with componentwise
// addition and (a1,e1)(a2,e2) = (a1*a2, a1*e2 + a2*e1). The A-action on a
// coset is multiplication by the image of a in A/I. Elements are indexed as
// a * |Q|^r + sum q_i * |Q|^(r-1-i) with Q = A/I.
inline RingPtr trivial_extension(const RingPtr& A, const Ideal& I, long rank,
                                 const RunConfig& cfg = {}) {
    if (I.ring != A) fail(errc::ring_mismatch, "ideal does not belong to the base ring");
    if (rank < 1) fail(errc::bad_spec, "trivial extension rank must be >= 1");
    QuotientRing qr = quotient(A, I, cfg);
    const TableRing& base = *A;
    const TableRing& Q = *qr.ring;

    long order = base.order;
    for (long i = 0; i < rank; ++i) {
        order *= Q.order;
        check_order_cap(order, cfg);
    }
    const long module_size = order / base.order;  // |Q|^rank

    TableRing R;
    R.order = static_cast<int>(order);
    R.add.resize(std::size_t(order) * order);
    R.mul.resize(std::size_t(order) * order);

    std::vector<long> qstride(rank, 1);
    for (long i = rank - 2; i >= 0; --i) qstride[i] = qstride[i + 1] * Q.order;
    auto digit = [&](long m, long i) { return (m / qstride[i]) % Q.order; };

    std::vector<long> xd(rank), yd(rank);
    for (long x = 0; x < order; ++x) {
        const elem xa = static_cast<elem>(x / module_size);
        const long xm = x % module_size;
        for (long i = 0; i < rank; ++i) xd[i] = digit(xm, i);
        const elem xq = qr.surjection[xa];  // image of the ring part in A/I
        for (long y = 0; y < order; ++y) {
            const elem ya = static_cast<elem>(y / module_size);
            const long ym = y % module_size;
            for (long i = 0; i < rank; ++i) yd[i] = digit(ym, i);
            const elem yq = qr.surjection[ya];

            long add_m = 0, mul_m = 0;
            for (long i = 0; i < rank; ++i) {
                elem xi = static_cast<elem>(xd[i]);
                elem yi = static_cast<elem>(yd[i]);
                add_m += qstride[i] * Q.a(xi, yi);
                // a1*e2 + a2*e1, coordinate i
                mul_m += qstride[i] * Q.a(Q.m(xq, yi), Q.m(yq, xi));
            }
            R.add[std::size_t(x) * order + y] =
                static_cast<elem>(long(base.a(xa, ya)) * module_size + add_m);
            R.mul[std::size_t(x) * order + y] =
                static_cast<elem>(long(base.m(xa, ya)) * module_size + mul_m);
        }
    }
    R.zero = static_cast<elem>(long(base.zero) * module_size);
    R.one = static_cast<elem>(long(base.one) * module_size);
    R.names.resize(order);
    for (long x = 0; x < order; ++x) {
        const long xa = x / module_size;
        const long xm = x % module_size;
        std::string nm = "(" + base.names[xa] + ",";
        if (rank == 1) {
            nm += Q.names[xm];
        } else {
            nm += "(";
            for (long i = 0; i < rank; ++i) {
                if (i) nm += ",";
                nm += Q.names[digit(xm, i)];
            }
            nm += ")";
        }
        R.names[x] = nm + ")";
    }
    R.provenance.kind = RingSpec::Kind::trivial_extension;
    R.provenance.children.push_back(base.provenance);
    for (elem g : I.generators) {
        bool plain = base.provenance.kind == RingSpec::Kind::zmod ||
                     base.provenance.kind == RingSpec::Kind::poly_quotient;
        R.provenance.generators.push_back(plain ? base.names[g] : std::to_string(g));
    }
    R.provenance.rank = rank;
    return finalize_ring(std::move(R));
}

}  // namespace pruferlab
