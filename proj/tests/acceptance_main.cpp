// Acceptance suite: runs each published-arithmetic criterion at its stated
// tolerance (exact equality throughout) and prints one PASS/FAIL line per
// criterion.  Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lashlab/braidkit.hpp"
#include "lashlab/contfrac.hpp"
#include "lashlab/family.hpp"
#include "lashlab/surgdesc.hpp"
#include "lashlab/traintrack.hpp"
#include "lashlab/twistcalc.hpp"

using namespace lashlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string note;
    auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_budget = budget_seconds <= 0 || elapsed < budget_seconds;
    if (!in_budget)
        note += (note.empty() ? "" : "; ") + std::string("over time budget");
    bool pass = ok && in_budget;
    if (!pass)
        ++failures;
    std::printf("CRITERION %2d %s: %s (%.3fs)%s\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", elapsed, note.empty() ? "" : ("  [" + note + "]").c_str());
}

BraidWord random_alternating(std::mt19937_64& rng, int max_regions) {
    std::uniform_int_distribution<int> regions(0, max_regions);
    std::uniform_int_distribution<int> twist(1, 4);
    std::uniform_int_distribution<int> chirality(0, 1);
    int k = regions(rng);
    int sign1 = chirality(rng) ? 1 : -1;
    std::vector<int> letters;
    for (int i = 0; i < k; ++i) {
        int generator = (i % 2 == 0) ? 1 : 2;
        int sign = (generator == 1) ? sign1 : -sign1;
        for (int t = twist(rng); t > 0; --t)
            letters.push_back(sign * generator);
    }
    return BraidWord(3, std::move(letters));
}

} // namespace

int main() {
    // 1. Table 1 alternating-surgery orders from the parameter columns
    criterion(1, "table1-lambda-alt", 1.0, [](std::string& note) {
        for (const Table1Row& t : table1_rows()) {
            LashingParams lp({t.a1, t.a2, t.a3}, t.m, 1, t.b1);
            if (lambda_alt(lp) != t.order) {
                note = "mismatch at order " + std::to_string(t.order);
                return false;
            }
        }
        note = "10/10 orders exact";
        return true;
    });

    // 2. dual-route equality on the ten rows and the b1 = 1..50 series
    criterion(2, "dual-route-equality", 5.0, [](std::string& note) {
        for (const Table1Row& t : table1_rows()) {
            LashingParams lp({t.a1, t.a2, t.a3}, t.m, 1, t.b1);
            auto order = h1_order(
                family_surgery_diagram(t.a1, t.a2, t.a3, t.m, t.b1, 0, Slope(0, 1), SurgeryVariant::S3));
            if (!order || *order != lambda_alt(lp)) {
                note = "route mismatch at order " + std::to_string(t.order);
                return false;
            }
        }
        for (int n = 1; n <= 50; ++n) {
            auto order =
                h1_order(family_surgery_diagram(1, 1, 1, 1, n, 0, Slope(0, 1), SurgeryVariant::S3));
            if (!order || *order != Int(389) + 563 * n + 204 * n * n) {
                note = "series mismatch at n = " + std::to_string(n);
                return false;
            }
        }
        note = "10 rows + 50-term series exact";
        return true;
    });

    // 3. closed-form polynomial over the 396-matrix grid
    criterion(3, "closed-form-grid", 10.0, [](std::string& note) {
        int count = 0;
        for (int b1 = 0; b1 <= 5; ++b1)
            for (int b2 = 0; b2 <= 5; ++b2)
                for (int r = -10; r <= 10; ++r) {
                    auto order = h1_order(
                        family_surgery_diagram(1, 1, 1, 1, b1, b2, Slope(r, 1), SurgeryVariant::S3));
                    if (!order || *order != closed_form_order(b1, b2, r)) {
                        note = "mismatch at (b1,b2,r)=(" + std::to_string(b1) + "," +
                               std::to_string(b2) + "," + std::to_string(r) + ")";
                        return false;
                    }
                    ++count;
                }
        note = std::to_string(count) + " matrices exact";
        return true;
    });

    // 4. Table 2 group structures and braid-index squares
    criterion(4, "table2-groups", 0, [](std::string& note) {
        for (const Table2Row& t : table2_rows()) {
            AbelianGroup got =
                h1_group(family_surgery_diagram(t.a1, t.a2, t.a3, t.m, t.b1, 0, Slope(0, 1),
                                                SurgeryVariant::S1xS2));
            AbelianGroup want;
            for (long d : t.torsion)
                want.torsion.push_back(d);
            if (!(got == want) || got.order() != Int(t.braid_index) * t.braid_index) {
                note = "mismatch at braid index " + std::to_string(t.braid_index);
                return false;
            }
        }
        note = "6/6 groups exact, orders are squared braid indices";
        return true;
    });

    // 5. positive-braid genus and the strand-count model
    criterion(5, "positive-braid-genus", 0, [](std::string& note) {
        bool ok = genus_positive_closure(12, 249) == 119 &&
                  genus_positive_closure(29, 1116) == 544;
        LashingParams k01111({1, 1, 0}, 1, 1, 1);
        LashingParams k11111({1, 1, 1}, 1, 1, 1);
        ok = ok && strand_count_model(k01111) == 12 && strand_count_model(k11111) == 29;
        note = "(12,249)->119, (29,1116)->544, strand model 12/29";
        return ok;
    });

    // 6. twist-slope equals cf_eval on 1000 randomized odd words
    criterion(6, "lemma-2.2-property", 0, [](std::string& note) {
        std::mt19937_64 rng(0xacce55);
        std::uniform_int_distribution<int> coeff(-5, 5);
        std::uniform_int_distribution<int> half_len(0, 4);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Int> coeffs(2 * half_len(rng) + 1);
            for (Int& c : coeffs)
                c = coeff(rng);
            if (twist_slope(TwistWord(coeffs)) != cf_eval(ContinuedFraction{coeffs})) {
                note = "failure at trial " + std::to_string(trial);
                return false;
            }
        }
        note = "1000/1000";
        return true;
    });

    // 7. continued-fraction roundtrip and Montesinos identities to 200
    criterion(7, "contfrac-suite", 0, [](std::string& note) {
        for (int p = 1; p <= 200; ++p)
            for (int q = 1; q <= 200; ++q) {
                if (gcd_int(p, q) != 1)
                    continue;
                Slope s(p, q);
                if (cf_eval(cf_expand(s, ExpansionStyle::AlternatingNonnegative)) != s ||
                    cf_eval(cf_expand(s, ExpansionStyle::OddLength)) != s) {
                    note = "roundtrip failure at " + s.str();
                    return false;
                }
                MontesinosTriple t = montesinos_triple(s);
                if (t.mu != Slope(-q, p + q) || t.lambda != Slope(-p, p + q)) {
                    note = "triple failure at " + s.str();
                    return false;
                }
                auto [mp, mq] = montesinos_triple_cf(s);
                if (cf_eval(mp) != t.lambda || cf_eval(mq) != t.mu) {
                    note = "cf identity failure at " + s.str();
                    return false;
                }
            }
        note = "all coprime p,q <= 200, zero failures";
        return true;
    });

    // 8. plat decomposition certificates on 1000 random alternating braids
    criterion(8, "lemma-9.1-suite", 0, [](std::string& note) {
        std::mt19937_64 rng(0x91a7);
        std::uniform_int_distribution<int> ap_len(3, 5);
        std::uniform_int_distribution<int> ap_coeff(1, 3);
        for (int trial = 0; trial < 1000; ++trial) {
            BraidWord xi = random_alternating(rng, 8);
            std::vector<int> a_prime(ap_len(rng));
            for (int& c : a_prime)
                c = ap_coeff(rng);
            PlatDecomposition d = decompose_two_bridge(xi, a_prime);
            if (!d.certificate_ok) {
                note = "certificate failure at trial " + std::to_string(trial) + ": " + d.detail;
                return false;
            }
        }
        note = "1000/1000 certificates";
        return true;
    });

    // 9. recursion vs closed form on the full n = 3 grid
    criterion(9, "weights-closed-form", 0, [](std::string& note) {
        int count = 0;
        for (int a1 = 0; a1 <= 4; ++a1)
            for (int a2 = 0; a2 <= 4; ++a2)
                for (int a3 = 0; a3 <= 4; ++a3)
                    for (int m = 0; m <= 4; ++m)
                        for (int p = 0; p <= 5; ++p)
                            for (int q = 0; q <= 5; ++q) {
                                if ((p == 0 && q == 0) || gcd_int(p, q) != 1)
                                    continue;
                                LashingParams lp({a1, a2, a3}, m, p, q);
                                TrackWeights w = weights(lp);
                                auto [x3, y3] = weights_closed_n3(lp);
                                if (w.xs[3] != x3 || w.ys[3] != y3) {
                                    note = "mismatch in the grid";
                                    return false;
                                }
                                ++count;
                            }
        note = std::to_string(count) + " tuples exact";
        return true;
    });

    // 10. genus-formula reconciliation report, deterministic
    criterion(10, "genus-reconciliation-report", 0, [](std::string& note) {
        std::ostringstream report;
        auto render = [&report]() {
            report.str("");
            for (const Table1Row& t : table1_rows()) {
                LashingParams lp({t.a1, t.a2, t.a3}, t.m, 1, t.b1);
                Int formula = genus_formula(lp);
                report << "K(" << t.a3 << "," << t.a2 << "," << t.a1 << "," << t.m << ","
                       << t.b1 << ") formula=" << formula << " table=" << t.genus
                       << " status=" << (formula == t.genus ? "match" : "mismatch") << "\n";
            }
            return report.str();
        };
        std::string first = render();
        std::string second = render();
        if (first != second) {
            note = "report not deterministic";
            return false;
        }
        // resolved relationship: formula = 2*g + y_n + 6q + m(q+1)^2, so the
        // status is a systematic mismatch on every published row while
        // lambda_alt is unaffected
        for (const Table1Row& t : table1_rows()) {
            LashingParams lp({t.a1, t.a2, t.a3}, t.m, 1, t.b1);
            Int formula = genus_formula(lp);
            Int residual = formula - 2 * t.genus - weights(lp).ys.back();
            if (formula == t.genus || residual != 6 * t.b1 + Int(t.m) * (t.b1 + 1) * (t.b1 + 1)) {
                note = "unexpected reconciliation at order " + std::to_string(t.order);
                return false;
            }
        }
        std::cout << first;
        note = "deterministic; systematic mismatch, residual law confirmed";
        return true;
    });

    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures;
}
