#include "fpf/elimination.hpp"
#include "fpf/invariants.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fpf {

std::string filter_name(Filter f) {
    switch (f) {
        case Filter::Determinant: return "determinant";
        case Filter::SelfLinking: return "self_linking";
        case Filter::Alexander: return "alexander";
        case Filter::FdtcBound: return "fdtc_bound";
        case Filter::None: return "none";
    }
    return "?";
}

std::string Verdict::values() const {
    std::ostringstream os;
    os << "det=" << det << " sl=" << sl;
    if (components > 1) os << " components=" << components;
    if (fdtc) os << " c=" << fdtc->str();
    return os.str();
}

LaurentPoly alexander_T35() { return LaurentPoly::from_coeffs({1, -1, 0, 1, -1, 1, 0, -1, 1}); }

Verdict eliminate_T35(const BraidWord& b, const FilterOrder& order, bool allow_links) {
    Verdict v;
    v.braid = b;
    v.label = b.str();
    v.components = cycle_count(strand_permutation(b));
    if (v.components > 1 && !allow_links)
        throw NotAKnot("closure of " + b.str() + " has " + std::to_string(v.components) + " components");
    v.det = determinant_of_closure(b);
    v.sl = self_linking(b);
    if (v.components == 1) v.alexander = alexander_of_closure(b);
    for (Filter f : order) {
        bool hit = false;
        switch (f) {
            case Filter::Determinant: hit = v.det != kDetT35; break;
            case Filter::SelfLinking: hit = v.sl > kMaxSelfLinkingT35; break;
            case Filter::Alexander: hit = v.alexander && !(*v.alexander == alexander_T35()); break;
            default: throw std::invalid_argument("eliminate_T35 takes invariant filters only");
        }
        if (hit) {
            v.eliminated_by = f;
            break;
        }
    }
    return v;
}

BraidWord beta_i(int i) {
    switch (i) {
        case 1: return BraidWord::parse(5, "4 3 4 3 -1 -2 -1 -2");
        case 2: return BraidWord::parse(5, "-1 -1 -1 -2 -3 2 3 4 3 4");
        case 3: return BraidWord::parse(5, "(4 3 -1 -2)^2");
    }
    throw std::out_of_range("beta_i: i in 1..3");
}

BraidWord beta_n(int n) {
    if (n < 0) throw std::out_of_range("beta_n: n >= 0");
    std::vector<int> w(n + 2, 1);
    w.insert(w.end(), {2, 3, 4, 1, 2, 3, 4, 4});
    return BraidWord(5, w);
}

BraidWord alpha_braid() { return BraidWord::parse(5, "1 2 3 4 1 2"); }

std::vector<Candidate> twist_family(const BraidWord& base, const std::string& name, const Fdtc& base_c, int kmax) {
    std::vector<Candidate> out;
    const BraidWord D2 = BraidWord::full_twist(base.n);
    for (int k = -kmax; k <= kmax; ++k)
        for (int sign : {1, -1}) {
            Candidate c;
            c.k = k;
            c.sign = sign;
            c.braid = compose(power(D2, k), sign > 0 ? base : base.inverse());
            c.c = fdtc_compose(base_c, k, sign);
            std::string s;
            if (k != 0) s = "D^" + std::to_string(2 * k) + " ";
            c.label = s + name + (sign < 0 ? "^-1" : "");
            out.push_back(std::move(c));
        }
    return out;
}

namespace {

void add_family(SuiteResult& r, const std::vector<Candidate>& fam, const FilterOrder& order, long bound) {
    for (const auto& c : fam) {
        Verdict v = eliminate_T35(c.braid, order, true);
        v.label = c.label;
        v.fdtc = c.c;
        auto adm = lspace_admissible(c.c, bound);
        v.fdtc_within_bound = adm.within_bound;
        v.fdtc_nonzero = adm.nonzero;
        if (!adm.within_bound) {
            v.eliminated_by = Filter::FdtcBound;
        } else {
            ++r.admissible;
            if (v.eliminated_by == Filter::None) ++r.survivors;
        }
        r.verdicts.push_back(std::move(v));
    }
}

}  // namespace

SuiteResult run_theorem_suite(const std::string& name, long bound) {
    SuiteResult r;
    r.name = name;
    const int kmax = (int)bound + 1;  // one step past the bound on each side
    if (name == "433") {
        for (int n = 0; n <= 10; ++n)
            add_family(r, twist_family(beta_n(n), "beta_" + std::to_string(n), beta_n_base(), kmax),
                       kSelfLinkingFirst, bound);
    } else if (name == "6") {
        add_family(r, twist_family(alpha_braid(), "alpha", alpha_base(), kmax), kSelfLinkingFirst, bound);
    } else if (name == "2-34") {
        for (int i = 1; i <= 3; ++i)
            add_family(r, twist_family(beta_i(i), "beta" + std::to_string(i), beta_i_base(), kmax), kDefaultOrder,
                       bound);
    } else {
        throw std::invalid_argument("unknown suite " + name + " (433, 6, 2-34)");
    }
    return r;
}

std::string SuiteResult::table() const {
    std::ostringstream os;
    os << std::left << std::setw(22) << "braid" << std::setw(14) << "filter" << std::setw(8) << "det"
       << std::setw(6) << "sl" << std::setw(8) << "c" << "comp\n";
    for (const auto& v : verdicts) {
        std::ostringstream det;
        det << v.det;
        os << std::left << std::setw(22) << v.label << std::setw(14) << filter_name(v.eliminated_by) << std::setw(8)
           << det.str() << std::setw(6) << v.sl << std::setw(8) << (v.fdtc ? v.fdtc->str() : "-") << v.components
           << "\n";
    }
    os << "admissible " << admissible << ", not eliminated " << survivors << "\n";
    return os.str();
}

}  // namespace fpf
