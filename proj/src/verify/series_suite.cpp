#include "cmg/verify/series_suite.hpp"

#include <algorithm>
#include <functional>

#include "cmg/errors.hpp"
#include "cmg/hypercover/branch.hpp"

namespace cmg::verify
{

using ws::a;
using ws::b;
using ws::ci;
using ws::Coef;
using ws::cq;
using ws::Series;

namespace
{

Coef A(long n, long d = 1) { return cq(n, d) * a(); }
Coef B(long n, long d = 1) { return cq(n, d) * b(); }

using Table = std::vector<std::pair<int, Coef>>;

struct Entry {
    std::string name;
    std::function<Series()> series;
    Table expected;
};

std::vector<Entry> entries(int N)
{
    using ws::Basic;
    using ws::expand_basic;
    auto basic = [N](Basic which) { return [N, which] { return expand_basic(which, N).s; }; };
    auto branch = [N](int k) { return [N, k] { return hc::branches_W(N)[k]; }; };
    Coef I = ci();

    std::vector<Entry> e;
    e.push_back({"x(t)", basic(Basic::XOfT), {{-2, cq(1)}, {2, -a()}, {4, -b()}, {6, -a() * a()}, {8, A(-3) * b()}}});
    e.push_back({"y(t)", basic(Basic::YOfT), {{-3, cq(-1)}, {1, a()}, {3, b()}, {5, a() * a()}, {7, A(3) * b()}}});
    e.push_back({"omega(t)", basic(Basic::OmegaOfT),
                 {{0, cq(1)}, {4, A(2)}, {6, B(3)}, {8, A(6) * a()}, {10, A(20) * b()}}});
    e.push_back({"z(t)", basic(Basic::ZOfT),
                 {{1, cq(1)}, {5, A(2, 5)}, {7, B(3, 7)}, {9, A(2, 3) * a()}, {11, A(20, 11) * b()}}});
    e.push_back({"x(z)", basic(Basic::X),
                 {{-2, cq(1)}, {2, A(-1, 5)}, {4, B(-1, 7)}, {6, A(1, 75) * a()}, {8, A(3, 385) * b()}}});
    e.push_back({"y(z)", basic(Basic::Y),
                 {{-3, cq(-1)}, {1, A(-1, 5)}, {3, B(-2, 7)}, {5, A(1, 25) * a()}, {7, A(12, 385) * b()}}});
    e.push_back({"v0(z)", basic(Basic::V0),
                 {{-1, cq(1)}, {3, A(1, 15)}, {5, B(1, 35)}, {7, A(-1, 525) * a()}, {9, A(-1, 1155) * b()}}});
    e.push_back({"z2^2", [N] { return hc::branch_z2_squared(N); },
                 {{2, cq(-1)}, {8, B(-2, 7)}, {12, A(4, 55) * b()}}});
    e.push_back({"z2[case1]", [f = branch(0)] { return f().z2; },
                 {{1, I}, {7, I * B(1, 7)}, {11, I * A(-2, 55) * b()}}});
    e.push_back({"f[case1]", [f = branch(0)] { return f().f; },
                 {{-3, cq(-2)}, {1, A(-2, 5)}, {3, B(3, 7)}, {5, A(2, 25) * a()}, {7, A(-53, 385) * b()}}});
    e.push_back({"f[case2]", [f = branch(1)] { return f().f; },
                 {{3, -b()},
                  {7, A(1, 5) * b()},
                  {9, B(-3, 14) * b()},
                  {11, A(-2, 25) * a() * b()},
                  {13, A(17, 110) * b() * b()}}});
    Table dz1{{-1, cq(-3)}, {3, A(4, 5)}, {5, B(-9, 7)}, {7, A(-12, 25) * a()}, {9, A(86, 77) * b()}};
    Table de1{{4, A(4, 5)}, {6, B(-9, 7)}, {8, A(-12, 25) * a()}, {10, A(86, 77) * b()}};
    Table ds1{{4, B(6, 5)},
              {6, A(2, 7) * a()},
              {8, A(-18, 25) * b()},
              {10, cq(-172, 1155) * a().pow(3) + cq(774, 1155) * b() * b()}};
    auto neg = [](Table t) {
        for (auto &[k, c] : t) c = -c;
        return t;
    };
    auto part = [](std::function<hc::BranchData()> f, int mask) { return [f, mask] { return f().dlogf.part(mask); }; };
    e.push_back({"dlogf[case1].dz", part(branch(0), hc::DZ), dz1});
    e.push_back({"dlogf[case1].de", part(branch(0), hc::DE), de1});
    e.push_back({"dlogf[case1].ds", part(branch(0), hc::DS), ds1});
    e.push_back({"dlogf[case2].dz", part(branch(1), hc::DZ), neg(dz1)});
    Table de2 = neg(de1);
    de2.insert(de2.begin(), {0, cq(6)});
    e.push_back({"dlogf[case2].de", part(branch(1), hc::DE), de2});
    // z^6 and z^10 are covered by the f1 f2 = 2b identity below
    e.push_back({"dlogf[case2].ds", part(branch(1), hc::DS),
                 {{0, A(-4, 3) * a() * b().pow(-1)}, {4, B(-6, 5)}, {8, A(18, 25) * b()}}});
    return e;
}

} // namespace

const char *status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Truncated: return "truncated";
    }
    return "?";
}

bool SuiteResult::ok() const { return product_identity && first_failure() == nullptr; }

const CoefCheck *SuiteResult::first_failure() const
{
    for (const auto &c : checks)
        if (c.status != CheckStatus::Pass) return &c;
    return nullptr;
}

SuiteResult series_suite(const SuiteOptions &opt)
{
    if (opt.order < 1) throw DomainError("order must be positive");
    SuiteResult r;
    for (const Entry &e : entries(opt.order)) {
        Series s = e.series();
        for (const auto &[k, want] : e.expected) {
            CoefCheck c{e.name, k, want.str(), "", CheckStatus::Pass};
            try {
                Coef got = s.coeff(k);
                if (opt.corrupt && opt.corrupt->first == e.name && opt.corrupt->second == k) got = got + cq(1);
                c.got = got.str();
                if (!(got == want)) c.status = CheckStatus::Fail;
            } catch (const TruncationExhausted &) {
                c.status = CheckStatus::Truncated;
            }
            r.checks.push_back(std::move(c));
        }
    }
    auto W = hc::branches_W(opt.order);
    Series prod = W[0].f * W[1].f;
    r.product_order = prod.trunc();
    r.product_identity = true;
    for (int k = std::min(prod.ord(), 0); k < prod.trunc(); ++k)
        if (!(prod.coeff(k) == (k == 0 ? B(2) : cq(0)))) r.product_identity = false;
    return r;
}

} // namespace cmg::verify
