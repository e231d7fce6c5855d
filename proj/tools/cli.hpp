/*
 * Copyright 2026 The egrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// egrl command-line front end. run() is the whole program; main() only
// forwards argv, so the test suite drives the same code path.
//
// Exit codes: 0 ok, 2 bad input, 3 unsupported shape, 4 verification failure.

#pragma once

#include "egrl/egrl.hpp"
#include "egrl/instance.hpp"
#include "egrl/random.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace egrl::cli {

inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kVerifyFailed = 4;

inline int exit_code_for(Errc e) { return e == Errc::UnsupportedShape ? kUnsupported : kBadInput; }

struct InstanceOpts {
    std::optional<std::uint64_t> q;
    std::string mod;
    std::optional<std::size_t> k, n;
    std::string alpha, v, M;
    std::optional<std::uint64_t> b;
    std::size_t ell = 2, t = 0;
    bool special = false;
    std::string order = "asc";
    std::string instance, generator;
    std::uint64_t budget = kDefaultBudget;
    bool json = false;

    void attach(CLI::App& sub) {
        sub.add_option("--q", q, "field size q = p^s");
        sub.add_option("--mod", mod, "modulus coefficients c0,...,c_{s-1},1 (default: smallest primitive)");
        sub.add_option("--k", k, "dimension");
        sub.add_option("--n", n, "number of evaluation points");
        sub.add_option("--alpha", alpha, "evaluation points, comma-separated codes");
        sub.add_option("--v", v, "column multipliers (default all ones)");
        sub.add_option("--b", b, "last-column coefficient (default 1)");
        sub.add_option("--M", M, "ell x ell matrix, row-major codes");
        sub.add_option("--ell", ell, "appended block width (default 2)");
        sub.add_option("--t", t, "monomial index of the last column (default 0)");
        sub.add_flag("--special", special, "alpha = F_q^*, v = 1, ell = 2, t = 0");
        sub.add_option("--order", order, "F_q^* order for --special: asc | gen")->check(CLI::IsMember({"asc", "gen"}));
        sub.add_option("--instance", instance, "JSON instance file");
        sub.add_option("--generator", generator, "raw generator matrix file (needs --q)");
        sub.add_option("--budget", budget, "maximum number of enumerated messages");
        sub.add_flag("--json", json, "JSON report");
    }

    FieldPtr field() const {
        if (!q) throw Error(Errc::ParseError, "--q is required");
        std::optional<std::vector<std::uint32_t>> m;
        if (!mod.empty()) m = parse_code_list(mod);
        return Field::make_q(*q, m);
    }

    bool has_instance() const { return !instance.empty() || special || !alpha.empty(); }

    EgrlParams params() const {
        if (!instance.empty()) {
            std::ifstream in(instance);
            if (!in) throw Error(Errc::ParseError, "cannot open instance file " + instance);
            std::stringstream ss;
            ss << in.rdbuf();
            return instance_from_string(ss.str());
        }
        FieldPtr f = field();
        auto codes = [](const std::string& s) {
            auto raw = parse_code_list(s);
            return std::vector<Code>(raw.begin(), raw.end());
        };
        if (M.empty()) throw Error(Errc::ParseError, "--M is required");
        const auto mcodes = codes(M);
        if (!k) throw Error(Errc::ParseError, "--k is required");
        const Code bb = static_cast<Code>(b.value_or(1));
        if (!f->contains(bb)) throw Error(Errc::DomainSize, "b outside field");
        if (special) {
            if (ell != 2 || t != 0) throw Error(Errc::UnsupportedShape, "--special fixes ell = 2, t = 0");
            if (mcodes.size() != 4) throw Error(Errc::DimMismatch, "--M needs 4 entries");
            auto p = special_construction(f, *k, bb, Matrix(f, 2, 2, mcodes),
                                          order == "gen" ? StarOrder::GeneratorPowers : StarOrder::Ascending);
            if (n && *n != p.n) throw Error(Errc::DimMismatch, "--special has n = q-1");
            return p;
        }
        if (alpha.empty()) throw Error(Errc::ParseError, "--alpha, --special or --instance is required");
        EgrlParams p;
        p.field = f;
        p.alpha = codes(alpha);
        p.n = n.value_or(p.alpha.size());
        p.k = *k;
        p.ell = ell;
        p.t = t;
        p.v = v.empty() ? std::vector<Code>(p.alpha.size(), 1) : codes(v);
        p.b = bb;
        if (mcodes.size() != ell * ell)
            throw Error(Errc::DimMismatch, "--M has " + std::to_string(mcodes.size()) + " entries, need ell^2 = " + std::to_string(ell * ell));
        p.M = Matrix(f, ell, ell, mcodes);
        p.validate();
        return p;
    }

    Matrix raw_generator() const {
        FieldPtr f = field();
        std::ifstream in(generator);
        if (!in) throw Error(Errc::ParseError, "cannot open generator file " + generator);
        return Matrix::read(f, in);
    }
};

namespace detail {

inline Json matrix_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (auto c : m.row(r)) row.push_back(c);
        rows.push_back(row);
    }
    j["data"] = rows;
    return j;
}

inline std::string instance_line(const EgrlParams& p) {
    return "instance: " + p.field->to_string() + " n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
           " ell=" + std::to_string(p.ell) + " t=" + std::to_string(p.t);
}

inline std::string join_codes(const std::vector<Code>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string dual_params(const CodeClass& c) {
    return "[" + std::to_string(c.n) + "," + std::to_string(c.n - c.k) + "," + std::to_string(c.dual_d) + "]";
}

inline void emit_json(std::ostream& out, const Json& j) { out << stringify_numbers(j).dump(2) << "\n"; }

} // namespace detail

inline int cmd_construct(const InstanceOpts& o, bool with_h, bool verify, const std::string& save, std::ostream& out,
                         std::ostream& err) {
    const EgrlParams p = o.params();
    const Matrix G = generator_matrix(p);
    std::optional<Matrix> H;
    if (with_h) H = parity_check_matrix(p);
    bool ok = true;
    bool ghz = false;
    std::size_t rank_h = 0;
    if (H) {
        ghz = (G * H->transpose()).is_zero();
        rank_h = H->rank();
        ok = ghz && rank_h == p.n + 3 - p.k;
    }
    if (!save.empty()) {
        std::ofstream f(save);
        if (!f) throw Error(Errc::ParseError, "cannot write " + save);
        f << instance_to_json(p).dump(2) << "\n";
    }
    if (o.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "construct";
        j["instance"] = instance_to_json(p);
        j["G"] = detail::matrix_json(G);
        if (H) {
            j["H"] = detail::matrix_json(*H);
            j["oracle_agreement"] = {{"GHt_zero", ghz}, {"rank_H", rank_h == p.n + 3 - p.k}};
        }
        detail::emit_json(out, j);
    } else {
        out << G;
        if (H) out << "\n" << *H;
        if (H && verify) out << "\nG*H^T = 0: " << (ghz ? "true" : "false") << "\nrank(H) = " << rank_h << "\n";
    }
    if (H && !ok) {
        err << "verification failed: G*H^T = 0 is " << (ghz ? "true" : "false") << ", rank(H) = " << rank_h << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

inline int cmd_classify(const InstanceOpts& o, bool verify, std::ostream& out, std::ostream& err) {
    Json j;
    j["schema"] = 1;
    j["command"] = "classify";
    if (!o.generator.empty() && !o.has_instance()) {
        const auto c = classify(LinearCode::from_generator(o.raw_generator()), o.budget);
        if (o.json) {
            j["parameters"] = c.parameters();
            j["label"] = c.label_name();
            j["dual_parameters"] = detail::dual_params(c);
            j["singleton_defect"] = c.singleton_defect;
            j["dual_defect"] = c.dual_defect;
            detail::emit_json(out, j);
        } else {
            out << "code: " << c.parameters() << " " << c.label_name() << "\n";
            out << "dual: " << detail::dual_params(c) << " defect " << c.dual_defect << "\n";
        }
        return kOk;
    }

    const EgrlParams p = o.params();
    j["instance"] = instance_to_json(p);
    std::ostringstream text;
    text << detail::instance_line(p) << "\n";
    const bool criterion = p.ell == 2 && p.t == 0;
    std::optional<MdsReport> rep;
    bool dual_amds = false;
    if (criterion) {
        rep = check_mds(p);
        dual_amds = !rep->alpha_zero_violation && rep->witness;
        text << "MDS: " << (rep->is_mds ? "true" : "false");
        if (rep->alpha_zero_violation) text << "; alpha_" << *rep->alpha_zero_violation + 1 << " = 0";
        if (rep->witness) {
            std::string vals;
            for (std::size_t i = 0; i < rep->witness->values.size(); ++i)
                vals += (i ? "," : "") + std::to_string(rep->witness->values[i]);
            text << "; witness I_" << rep->witness->m << "={" << vals << "} j=" << rep->witness->j;
        }
        text << "\ndual AMDS: " << (dual_amds ? "true" : "false") << "\n";
        Json r;
        r["is_mds"] = rep->is_mds;
        r["alpha_zero_violation"] = rep->alpha_zero_violation ? Json(*rep->alpha_zero_violation) : Json(nullptr);
        if (rep->witness) {
            r["witness"] = {{"m", rep->witness->m}, {"j", rep->witness->j}, {"target", rep->witness->target},
                            {"indices", rep->witness->indices}, {"subset", rep->witness->values}};
        } else {
            r["witness"] = nullptr;
        }
        r["dual_amds"] = dual_amds;
        j["criteria"] = r;
    } else {
        text << "criterion: skipped (ell = " << p.ell << ", t = " << p.t << " is brute-force only)\n";
        j["criteria"] = nullptr;
    }

    bool agree = true;
    if (verify || !criterion) {
        const auto c = classify(egrl_code(p), o.budget);
        text << "brute force: " << c.parameters() << " " << c.label_name() << "; dual " << detail::dual_params(c)
             << " defect " << c.dual_defect << "\n";
        Json b;
        b["parameters"] = c.parameters();
        b["label"] = c.label_name();
        b["dual_parameters"] = detail::dual_params(c);
        b["singleton_defect"] = c.singleton_defect;
        b["dual_defect"] = c.dual_defect;
        j["brute_force"] = b;
        if (criterion && verify) {
            const bool mds_ok = rep->is_mds == c.is_mds();
            const bool amds_ok = rep->alpha_zero_violation || dual_amds == (c.dual_defect == 1);
            agree = mds_ok && amds_ok;
            text << "agreement: " << (agree ? "true" : "false") << "\n";
            j["oracle_agreement"] = {{"mds", mds_ok}, {"dual_amds", static_cast<bool>(amds_ok)}};
        }
    }
    if (o.json) detail::emit_json(out, j);
    else out << text.str();
    if (!agree) {
        err << "verification failed: criterion and brute force disagree\n";
        return kVerifyFailed;
    }
    return kOk;
}

inline int cmd_weights(const InstanceOpts& o, const std::string& method, std::ostream& out, std::ostream& err) {
    Json j;
    j["schema"] = 1;
    j["command"] = "weights";
    j["method"] = method;
    std::optional<WeightDistribution> formula_p, formula_d, brute_p, brute_d;

    if (!o.generator.empty() && !o.has_instance()) {
        if (method != "brute") throw Error(Errc::UnsupportedShape, "raw generator input supports --method brute only");
        const auto c = classify(LinearCode::from_generator(o.raw_generator()), o.budget);
        brute_p = c.primal;
        brute_d = c.dual;
    } else {
        const EgrlParams p = o.params();
        j["instance"] = instance_to_json(p);
        if (method != "brute") {
            auto fd = special_nmds_distribution(p);
            formula_p = fd.first;
            formula_d = fd.second;
        }
        if (method != "formula") {
            const auto c = classify(egrl_code(p), o.budget);
            brute_p = c.primal;
            brute_d = c.dual;
        }
    }
    const WeightDistribution& primal = brute_p ? *brute_p : *formula_p;
    const WeightDistribution& dual = brute_d ? *brute_d : *formula_d;
    const bool both = formula_p && brute_p;
    const bool agree = !both || (*formula_p == *brute_p && *formula_d == *brute_d);

    if (o.json) {
        j["enumerator"] = primal.polynomial();
        j["distribution"] = primal.decimal_strings();
        j["dual_enumerator"] = dual.polynomial();
        j["dual_distribution"] = dual.decimal_strings();
        if (both) j["oracle_agreement"] = agree;
        detail::emit_json(out, j);
    } else {
        out << "enumerator: " << primal.polynomial() << "\n";
        out << "distribution: " << Json(primal.decimal_strings()).dump() << "\n";
        out << "dual enumerator: " << dual.polynomial() << "\n";
        if (both) out << "agreement: " << (agree ? "true" : "false") << "\n";
    }
    if (!agree) {
        err << "verification failed: formula " << formula_p->polynomial() << " vs brute force " << brute_p->polynomial() << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

inline int cmd_subsetsum(const InstanceOpts& o, const std::string& domain, std::size_t m, std::uint64_t b,
                         const std::string& method, std::ostream& out, std::ostream& err) {
    FieldPtr f = o.field();
    if (!f->contains(static_cast<std::int64_t>(b))) throw Error(Errc::DomainSize, "b outside field");
    const Domain d = domain == "full" ? Domain::Full : Domain::Star;
    const Code target = static_cast<Code>(b);
    std::optional<BigCount> closed, dp;
    if (method != "dp") closed = count_li_wan(*f, d, m, target);
    if (method == "dp" || method == "both") dp = count_dp(SubsetSumQuery::over(f, d, m, target));
    const BigCount& count = closed ? *closed : *dp;
    const bool both = closed && dp;
    const bool agree = !both || *closed == *dp;
    std::string van;
    try {
        van = vanishes(*f, d, m, target) ? "true" : "false";
    } catch (const Error&) {
        van = "out of stated range";
    }
    if (o.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "subsetsum";
        j["field"] = f->to_string();
        j["domain"] = domain;
        j["m"] = m;
        j["b"] = b;
        j["count"] = count.str();
        if (closed) j["closed_form"] = closed->str();
        if (dp) j["dp"] = dp->str();
        if (both) j["oracle_agreement"] = agree;
        j["vanishes"] = van;
        detail::emit_json(out, j);
    } else {
        out << count.str() << "\n";
        if (both) out << "agreement: " << (agree ? "true" : "false") << "\n";
    }
    if (!agree) {
        err << "verification failed: closed form " << closed->str() << " vs dp " << dp->str() << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

struct SweepCell {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t parity_run = 0, criterion_run = 0, special_run = 0, skipped = 0;
    bool golden = false;
};

/// Randomized formula-vs-oracle sweep. Every disagreement is a string in `bad`.
inline SweepCell sweep_cell(std::uint64_t q, std::size_t k, std::size_t trials, std::uint64_t seed, std::uint64_t budget,
                            std::vector<std::string>& bad) {
    SweepCell cell{q, k};
    const FieldPtr f = Field::make_q(q);
    Rng rng(seed ^ (q * 0x9E3779B97F4A7C15ull) ^ (k * 0xC2B2AE3D27D4EB4Full));
    const std::string where = "q=" + std::to_string(q) + " k=" + std::to_string(k);
    auto note = [&](std::size_t trial, const std::string& what, const EgrlParams& p) {
        bad.push_back(where + " trial " + std::to_string(trial) + ": " + what + " alpha=" + detail::join_codes(p.alpha) +
                      " v=" + detail::join_codes(p.v) + " b=" + std::to_string(p.b) + " M=" + detail::join_codes(p.M.data()));
    };

    if (k >= 4 && k + 1 <= q) {
        for (std::size_t tr = 0; tr < trials; ++tr) {
            const auto n = static_cast<std::size_t>(rng.between(k + 1, q));
            const auto p = random_params(f, n, k, rng);
            const Matrix H = parity_check_matrix(p);
            if (!(generator_matrix(p) * H.transpose()).is_zero()) note(tr, "G*H^T != 0", p);
            if (H.rank() != n + 3 - k) note(tr, "rank(H) != n+3-k", p);
            ++cell.parity_run;
        }
    }
    if (k <= q) {
        for (std::size_t tr = 0; tr < trials; ++tr) {
            const auto n = static_cast<std::size_t>(rng.between(k, q));
            const auto p = random_params(f, n, k, rng);
            const auto rep = check_mds(p);
            CodeClass c;
            try {
                c = classify(egrl_code(p), budget);
            } catch (const Error& e) {
                if (e.code() != Errc::BudgetExceeded) throw;
                ++cell.skipped;
                continue;
            }
            if (rep.is_mds != c.is_mds()) note(tr, "check_mds disagrees with brute force", p);
            if (!rep.alpha_zero_violation && check_dual_amds(p) != (c.dual_defect == 1))
                note(tr, "check_dual_amds disagrees with brute force", p);
            ++cell.criterion_run;
        }
    }
    const bool in_range = f->p() == 2 ? (k >= 5 && k + 2 <= q) : (k >= 4 && k + 1 <= q);
    if (in_range) {
        for (std::size_t tr = 0; tr < trials; ++tr) {
            EgrlParams p;
            if (q == 9 && k == 5 && tr == 0) {
                // Golden instance over x^2 + x + 2 (the default modulus for q = 9).
                p = special_construction(f, 5, 2, Matrix::from_rows(f, {{1, 1}, {2, 1}}), StarOrder::GeneratorPowers);
            } else {
                p = special_construction(f, k, random_nonzero(*f, rng), random_invertible(f, 2, rng));
            }
            const auto formula = special_nmds_distribution(p);
            if (q == 9 && k == 5 && tr == 0 &&
                formula.first.polynomial() != "1+224x^6+1520x^7+4880x^8+14040x^9+22240x^10+16144x^11")
                note(tr, "golden enumerator mismatch", p);
            if (q == 9 && k == 5 && tr == 0) cell.golden = true;
            CodeClass c;
            try {
                c = classify(egrl_code(p), budget);
            } catch (const Error& e) {
                if (e.code() != Errc::BudgetExceeded) throw;
                ++cell.skipped;
                continue;
            }
            if (!c.is_nmds()) note(tr, "special construction not NMDS", p);
            if (c.dual.counts[k] != dual_min_weight_count(p)) note(tr, "A_k^perp census mismatch", p);
            if (c.primal != formula.first || c.dual != formula.second) note(tr, "NMDS distribution mismatch", p);
            const auto nm = nmds_distribution(p.length(), k, *f, c.primal.counts[p.length() - k]);
            if (nm.first != c.primal || nm.second != c.dual) note(tr, "nmds_distribution(brute A_min) mismatch", p);
            ++cell.special_run;
        }
    }
    return cell;
}

inline int cmd_sweep(const std::string& q_list, const std::string& k_list, std::size_t trials, std::uint64_t seed,
                     std::uint64_t q_cap, std::uint64_t budget, bool json, bool timing, std::ostream& out,
                     std::ostream& err) {
    const auto qs = parse_code_list(q_list);
    const auto ks = parse_code_list(k_list);
    if (qs.empty() || ks.empty()) {
        err << "sweep: --q-list and --k-list must be non-empty\n";
        return kBadInput;
    }
    for (auto q : qs)
        if (q > q_cap) throw Error(Errc::RangeViolation, "q = " + std::to_string(q) + " exceeds --q-cap " + std::to_string(q_cap));
    for (auto k : ks)
        if (k < 3) throw Error(Errc::RangeViolation, "k >= 3 required");
    for (auto q : qs) Field::make_q(q);

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> bad;
    std::vector<SweepCell> cells;
    for (auto q : qs)
        for (auto k : ks) cells.push_back(sweep_cell(q, k, trials, seed, budget, bad));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "sweep";
        j["seed"] = seed;
        j["trials"] = trials;
        Json arr = Json::array();
        for (const auto& c : cells)
            arr.push_back({{"q", c.q}, {"k", c.k}, {"parity", c.parity_run}, {"criterion", c.criterion_run},
                           {"special", c.special_run}, {"skipped", c.skipped}, {"golden", c.golden}});
        j["cells"] = arr;
        j["disagreements"] = bad;
        j["total_disagreements"] = bad.size();
        if (timing) j["seconds"] = std::to_string(secs);
        detail::emit_json(out, j);
    } else {
        for (const auto& c : cells)
            out << "q=" << c.q << " k=" << c.k << ": parity " << c.parity_run << ", criterion " << c.criterion_run
                << ", special " << c.special_run << ", skipped " << c.skipped << (c.golden ? ", golden checked" : "")
                << "\n";
        for (const auto& b : bad) out << "DISAGREEMENT " << b << "\n";
        out << bad.size() << " disagreements\n";
        if (timing) out << "elapsed: " << secs << " s\n";
    }
    return bad.empty() ? kOk : kVerifyFailed;
}

/// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"EGRL code toolkit", "egrl_cli"};
    app.require_subcommand(1);

    InstanceOpts con_o, cls_o, wt_o, ss_o;
    bool with_h = false, con_verify = false, cls_verify = false;
    std::string save;
    auto* con = app.add_subcommand("construct", "print the generator (and parity-check) matrix");
    con_o.attach(*con);
    con->add_flag("--with-h", with_h, "also print the parity-check matrix");
    con->add_flag("--verify", con_verify, "report the G*H^T and rank checks");
    con->add_option("--save-instance", save, "write the instance as JSON");

    auto* cls = app.add_subcommand("classify", "MDS / dual-AMDS criteria, optionally brute-force checked");
    cls_o.attach(*cls);
    cls->add_flag("--verify", cls_verify, "cross-check against exhaustive enumeration");

    std::string w_method = "brute";
    auto* wt = app.add_subcommand("weights", "weight distributions");
    wt_o.attach(*wt);
    wt->add_option("--method", w_method, "formula | brute | both")->check(CLI::IsMember({"formula", "brute", "both"}));

    std::string domain = "star", s_method = "closed";
    std::size_t m = 0;
    std::uint64_t sb = 0;
    auto* ss = app.add_subcommand("subsetsum", "count m-subsets of F_q or F_q^* with a given sum");
    ss->add_option("--q", ss_o.q, "field size")->required();
    ss->add_option("--mod", ss_o.mod, "modulus coefficients");
    ss->add_option("--domain", domain, "full | star")->check(CLI::IsMember({"full", "star"}));
    ss->add_option("--m", m, "subset size")->required();
    ss->add_option("--b", sb, "target sum")->required();
    ss->add_option("--method", s_method, "closed | dp | both")->check(CLI::IsMember({"closed", "li-wan", "dp", "both"}));
    ss->add_flag("--json", ss_o.json, "JSON report");

    std::string q_list, k_list;
    std::size_t trials = 10;
    std::uint64_t seed = 1, q_cap = 16, sw_budget = 1ull << 22;
    bool sw_json = false, timing = false;
    auto* sw = app.add_subcommand("sweep", "randomized formula-vs-oracle verification");
    sw->add_option("--q-list", q_list, "comma-separated field sizes")->required();
    sw->add_option("--k-list", k_list, "comma-separated dimensions")->required();
    sw->add_option("--trials", trials, "instances per (q, k) and check");
    sw->add_option("--seed", seed, "RNG seed");
    sw->add_option("--q-cap", q_cap, "largest allowed q (default 16)");
    sw->add_option("--budget", sw_budget, "per-instance enumeration budget");
    sw->add_flag("--json", sw_json, "JSON report");
    sw->add_flag("--timing", timing, "append elapsed time");

    std::vector<std::string> argv_store{"egrl_cli"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (con->parsed()) return cmd_construct(con_o, with_h, con_verify, save, out, err);
        if (cls->parsed()) return cmd_classify(cls_o, cls_verify, out, err);
        if (wt->parsed()) return cmd_weights(wt_o, w_method, out, err);
        if (ss->parsed()) return cmd_subsetsum(ss_o, domain, m, sb, s_method == "li-wan" ? "closed" : s_method, out, err);
        if (sw->parsed()) return cmd_sweep(q_list, k_list, trials, seed, q_cap, sw_budget, sw_json, timing, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == Errc::BudgetExceeded) err << "hint: raise --budget\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

} // namespace egrl::cli
