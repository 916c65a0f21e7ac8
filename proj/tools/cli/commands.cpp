/*
   Copyright 2026 The mwl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "mwl/error.hpp"
#include "parallel.hpp"

namespace mwl::cli {

namespace {

std::string q(const Rational& r) { return mwl::to_string(r); }
std::string z(const Integer& i) { return mwl::to_string(i); }

Json matrix_json(const RatMatrix& m) {
    Json out = Json::array();
    for (auto& row : m) {
        Json r = Json::array();
        for (auto& e : row) r.push_back(q(e));
        out.push_back(r);
    }
    return out;
}

std::string matrix_text(const RatMatrix& m) {
    std::ostringstream os;
    for (auto& row : m) {
        os << "  [";
        for (size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << q(row[j]);
        os << "]\n";
    }
    return os.str();
}

template <class T>
Json long_list(const std::vector<T>& v) {
    Json out = Json::array();
    for (auto& e : v) out.push_back(e);
    return out;
}

Json coords_json(const Coordinates& c) {
    Json f = Json::array();
    for (auto& e : c.free) f.push_back(z(e));
    return Json{{"free", f}, {"torsion", long_list(c.torsion)}};
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

Json section_json(const Section& s) {
    if (s.is_zero()) return Json{{"zero", true}};
    return Json{{"x", s.x().to_string()}, {"y", s.y().to_string()}};
}

Json presentation_json(const Session& s) {
    const auto& pres = s.presentation();
    auto rep = verify_presentation(s.surface(), pres);
    Json checks = Json::array();
    for (auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    Json tors = Json::array();
    for (auto& t : pres.torsion) tors.push_back(Json{{"name", t.name}, {"order", t.order}});
    return Json{{"label", pres.lattice_label},
                {"basis", pres.basis_names},
                {"torsion", tors},
                {"gram", matrix_json(pres.gram)},
                {"det_gram", q(rep.det_gram)},
                {"predicted_det", q(rep.predicted_det)},
                {"index_squared", q(rep.index_squared)},
                {"expected_rank", rep.expected_rank},
                {"checks", checks},
                {"ok", rep.ok}};
}

std::string presentation_text(const Json& p) {
    std::ostringstream os;
    os << "presentation " << p["label"].get<std::string>() << ": " << (p["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    os << "  det gram " << p["det_gram"].get<std::string>() << ", predicted " << p["predicted_det"].get<std::string>()
       << ", index^2 " << p["index_squared"].get<std::string>() << "\n";
    for (auto& c : p["checks"])
        if (!c["ok"].get<bool>()) os << "  failed: " << c["name"].get<std::string>() << " (" << c["detail"].get<std::string>() << ")\n";
    return os.str();
}

const std::vector<std::string>& pick(const Options& o, const std::vector<std::string>& fallback) {
    return o.sections.empty() ? fallback : o.sections;
}

Json scenario_json(const Session& s) {
    return Json{{"name", s.scenario().name},
                {"file", std::filesystem::path(s.scenario().path).filename().string()},
                {"sha256", sha256_hex(s.scenario().bytes)}};
}

Json base_report(const Session& s, const std::string& command) {
    return Json{{"command", command},
                {"tool", Json{{"name", "mwl"}, {"version", kToolVersion}}},
                {"scenario", scenario_json(s)},
                {"field", s.field()->describe()},
                {"model", s.model()->to_string()}};
}

Json summary_json(const ArrangementSummary& a) {
    Json pts = Json::array();
    for (auto& e : a.points) {
        Json curves = Json::array();
        for (auto i : e.curves) curves.push_back(a.labels[i]);
        Json pairs = Json::array();
        for (auto& [i, j, m] : e.pairs) pairs.push_back(Json::array({a.labels[i], a.labels[j], m}));
        pts.push_back(Json{{"point", e.point.label()},
                           {"geometric_count", e.point.geometric_count()},
                           {"curves", curves},
                           {"pairs", pairs}});
    }
    return Json{{"labels", a.labels}, {"degrees", long_list(a.degrees)}, {"points", pts}};
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        fail(ErrorKind::InternalInconsistency, "sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput:
        case ErrorKind::InvalidModel:
        case ErrorKind::SingularModel:
        case ErrorKind::ModelNotMinimal:
        case ErrorKind::WrongPencilShape:
        case ErrorKind::CommonComponent:
        case ErrorKind::Precondition:
        case ErrorKind::FieldMismatch:
        case ErrorKind::VariableMismatch:
        case ErrorKind::ModelMismatch:
            return 2;
        case ErrorKind::Unsupported:
        case ErrorKind::UnsupportedResidue:
        case ErrorKind::UnsupportedFiberType:
        case ErrorKind::FieldDegreeCap:
            return 4;
        default:
            return 3;
    }
}

Output cmd_fibers(const Session& s) {
    const auto& S = s.surface();
    Json fibers = Json::array();
    std::vector<std::string> reducible;
    std::ostringstream os;
    os << s.scenario().name << ": " << s.model()->to_string() << " over " << s.field()->describe() << "\n";
    os << std::left << std::setw(28) << "place" << std::setw(8) << "type" << std::setw(6) << "deg" << std::setw(14)
       << "ord c4,c6,D" << std::setw(6) << "m_v" << "euler\n";
    for (auto& f : S.singular_fibers()) {
        fibers.push_back(Json{{"place", f.place.label()},
                              {"type", f.type.name()},
                              {"geometric_count", f.geometric_count()},
                              {"ord_c4", f.ord_c4},
                              {"ord_c6", f.ord_c6},
                              {"ord_delta", f.ord_delta},
                              {"m_v", f.m_v},
                              {"euler", f.euler}});
        if (f.type.reducible())
            for (int i = 0; i < f.geometric_count(); ++i) reducible.push_back(f.type.name());
        std::ostringstream ords;
        ords << f.ord_c4 << "," << f.ord_c6 << "," << f.ord_delta;
        os << std::setw(28) << (f.place.label() + " ") << std::setw(8) << f.type.name() << std::setw(6) << f.geometric_count()
           << std::setw(14) << ords.str() << std::setw(6) << f.m_v << f.euler << "\n";
    }
    std::sort(reducible.begin(), reducible.end());
    int total = S.euler_total();
    Json j = base_report(s, "fibers");
    j["fibers"] = fibers;
    j["euler_total"] = total;
    j["euler_expected"] = 12 * S.chi();
    j["reducible_types"] = reducible;
    j["reducible_count"] = reducible.size();
    j["rank"] = S.rational_rank();
    os << "euler total " << total << " (expected " << 12 * S.chi() << ")\n";
    if (reducible.empty())
        os << "no reducible fibers\n";
    else
        os << reducible.size() << " reducible fibers: " << join(reducible, " ") << "\n";
    os << "rank " << S.rational_rank() << "\n";
    return {j, os.str()};
}

Output cmd_height(const Session& s, const Options& o) {
    const auto& names = pick(o, s.scenario().height);
    auto reports = parallel_map(names.size(), o.jobs,
                                [&](size_t i) { return height_report(s.surface(), s.section(names[i])); });
    Json j = base_report(s, "height");
    std::ostringstream os;
    Json hs = Json::object();
    for (size_t i = 0; i < names.size(); ++i) {
        const auto& r = reports[i];
        Json hits = Json::array();
        for (auto& h : r.hits)
            hits.push_back(Json{{"place", h.place.label()},
                                {"type", h.fiber_type},
                                {"component", h.component},
                                {"geometric_count", h.geometric_count},
                                {"contribution", q(h.contribution)},
                                {"canonical", h.canonical}});
        hs[names[i]] = Json{{"height", q(r.height)}, {"sO", z(r.sO)}, {"correction", q(r.correction)}, {"hits", hits}};
        os << "<" << names[i] << ", " << names[i] << "> = " << q(r.height) << "   (sO = " << z(r.sO)
           << ", contr = " << q(r.correction) << ")\n";
    }
    j["heights"] = hs;
    if (names.size() > 1) {
        RatMatrix g = gram(s.surface(), s.sections(names));
        j["gram"] = Json{{"sections", names}, {"matrix", matrix_json(g)}};
        os << "gram (" << join(names, ", ") << ")\n" << matrix_text(g);
    }
    if (s.has_presentation()) {
        j["presentation"] = presentation_json(s);
        os << presentation_text(j["presentation"]);
    }
    return {j, os.str()};
}

Output cmd_dup(const Session& s, const Options& o) {
    const auto& names = pick(o, s.scenario().dup);
    auto dups = parallel_map(names.size(), o.jobs, [&](size_t i) { return smul(2, s.section(names[i])); });
    Json j = base_report(s, "dup");
    std::ostringstream os;
    Json ds = Json::object();
    for (size_t i = 0; i < names.size(); ++i) {
        const Section& d = dups[i];
        Json e = section_json(d);
        if (!d.is_zero()) {
            e["on_curve"] = on_curve(*s.model(), d.x(), d.y());
            e["x_polynomial"] = d.x().is_polynomial();
            if (d.x().is_polynomial()) e["x_degree"] = d.x().num().degree();
            os << "[2]" << names[i] << " = (" << d.x().to_string() << ", " << d.y().to_string() << ")\n";
        } else {
            os << "[2]" << names[i] << " = O\n";
        }
        ds[names[i]] = e;
    }
    j["dup"] = ds;
    if (!s.scenario().conics.empty()) {
        auto conics = tangent_conics_through(s.surface(), s.branch(), s.sections(s.scenario().conics));
        Json cs = Json::object();
        int count = 0;
        for (size_t i = 0; i < conics.size(); ++i) {
            const auto& name = s.scenario().conics[i];
            if (conics[i].conic) {
                ++count;
                cs[name] = Json{{"conic", conics[i].conic->label}, {"ok", true}};
                os << "conic from " << name << ": " << conics[i].conic->label << "\n";
            } else {
                cs[name] = Json{{"error", conics[i].error}, {"ok", false}};
                os << "no conic from " << name << ": " << conics[i].error << "\n";
            }
        }
        j["conics"] = Json{{"by_section", cs}, {"count", count}};
    }
    return {j, os.str()};
}

namespace {

struct DivideJob {
    size_t entry;
    long prime;
};

}  // namespace

Output cmd_divide(const Session& s, const Options& o) {
    const auto& pres = s.presentation();
    const auto& S = s.surface();
    std::vector<std::vector<std::string>> entries = s.scenario().divide;
    if (!o.sections.empty()) entries = {o.sections};
    if (entries.empty()) fail(ErrorKind::InvalidInput, "nothing to divide: no queries.divide and no --section");
    std::vector<long> primes;
    if (o.prime)
        primes = {*o.prime};
    else if (!o.all_primes)
        primes = s.scenario().primes;
    bool analysis = o.all_primes || !o.prime;

    // coordinates once per section
    std::vector<std::string> names;
    for (auto& e : entries)
        for (auto& n : e)
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    auto coords = parallel_map(names.size(), o.jobs,
                               [&](size_t i) { return coordinates_of(S, pres, s.section(names[i])); });
    auto coord_of = [&](const std::string& n) {
        return coords[std::find(names.begin(), names.end(), n) - names.begin()];
    };

    std::vector<DivideJob> jobs;
    for (size_t e = 0; e < entries.size(); ++e)
        for (long p : primes) jobs.push_back({e, p});
    auto results = parallel_map(jobs.size(), o.jobs, [&](size_t i) {
        std::vector<Coordinates> cs;
        for (auto& n : entries[jobs[i].entry]) cs.push_back(coord_of(n));
        return cover_from_coordinates(pres, cs, jobs[i].prime);
    });

    Json j = base_report(s, "divide");
    std::ostringstream os;
    Json cj = Json::object();
    for (auto& n : names) cj[n] = coords_json(coord_of(n));
    j["coordinates"] = cj;
    Json out = Json::array();
    for (size_t e = 0; e < entries.size(); ++e) {
        Json entry{{"sections", entries[e]}};
        os << "(" << join(entries[e], ", ") << ")\n";
        Json per = Json::object();
        for (size_t i = 0; i < jobs.size(); ++i) {
            if (jobs[i].entry != e) continue;
            const auto& r = results[i];
            per[std::to_string(r.prime)] = Json{{"exists", r.exists},
                                                {"multipliers", long_list(r.multipliers)},
                                                {"kernel_dimension", r.kernel_dimension},
                                                {"trace", r.trace}};
            os << "  p = " << r.prime << ": " << (r.exists ? "exists" : "does not exist");
            if (r.exists) {
                std::vector<std::string> ms;
                for (long m : r.multipliers) ms.push_back(std::to_string(m));
                os << ", multipliers (" << join(ms, ", ") << ")";
            }
            os << "\n";
        }
        entry["primes"] = per;
        if (analysis) {
            std::vector<Coordinates> cs;
            for (auto& n : entries[e]) cs.push_back(coord_of(n));
            auto a = odd_prime_analysis_from_coordinates(pres, cs);
            entry["all_odd_p"] = a.describe();
            os << "  " << a.describe() << "\n";
        }
        out.push_back(entry);
    }
    j["divide"] = out;
    return {j, os.str()};
}

namespace {

Section combination(const std::vector<Section>& cs, const std::vector<long>& a, const ModelPtr& m) {
    Section acc = Section::zero(m);
    for (size_t i = 0; i < cs.size(); ++i) acc = add(acc, smul(a[i], cs[i]));
    return acc;
}

// one leg of the certificate; want = expected existence for every odd prime
Json leg(const Session& s, const std::vector<std::string>& names, const std::vector<long>& primes, bool want,
         int jobs, std::vector<std::string>& reasons, const std::string& tag) {
    const auto& S = s.surface();
    const auto& pres = s.presentation();
    std::vector<Section> cs = s.sections(names);
    std::vector<Coordinates> coords;
    for (auto& c : cs) coords.push_back(coordinates_of(S, pres, c));
    auto analysis = odd_prime_analysis_from_coordinates(pres, coords);

    auto per = parallel_map(primes.size(), jobs, [&](size_t i) {
        long p = primes[i];
        CoverResult r = cover_from_coordinates(pres, coords, p);
        Json e{{"exists", r.exists},
               {"multipliers", long_list(r.multipliers)},
               {"matrix", Json::array()},
               {"kernel_dimension", r.kernel_dimension},
               {"trace", r.trace}};
        for (auto& row : r.matrix) e["matrix"].push_back(long_list(row));
        Json check;
        if (r.exists) {
            Section target = combination(cs, r.multipliers, s.model());
            auto s0 = divide_by(S, pres, target, p);
            bool ok = s0 && smul(p, *s0) == target;
            check = Json{{"method", "divide_by"}, {"ok", ok}};
            if (s0) check["quotient"] = section_json(*s0);
        } else if (cs.size() <= 3 && p <= 7) {
            bool found = exhaustive_cover_search(pres, coords, p);
            check = Json{{"method", "exhaustive"}, {"ok", !found}};
        } else {
            check = Json{{"method", "skipped"}, {"ok", true}, {"detail", "search bound is r <= 3, p <= 7"}};
        }
        check["agrees_with_all_odd_p"] = analysis.exists_for(p) == r.exists;
        e["reverify"] = check;
        return e;
    });

    Json pj = Json::object();
    for (size_t i = 0; i < primes.size(); ++i) {
        const Json& e = per[i];
        std::string p = std::to_string(primes[i]);
        if (e["exists"].get<bool>() != want)
            reasons.push_back(tag + ": p = " + p + (want ? " has no multipliers" : " has multipliers"));
        if (!e["reverify"]["ok"].get<bool>()) reasons.push_back(tag + ": re-verification failed at p = " + p);
        if (!e["reverify"]["agrees_with_all_odd_p"].get<bool>())
            reasons.push_back(tag + ": all-odd-p analysis disagrees at p = " + p);
        pj[p] = e;
    }
    bool uniform = analysis.default_exists == want;
    for (auto& [p, v] : analysis.checked)
        if (v != want) uniform = false;
    if (!uniform) reasons.push_back(tag + ": " + analysis.describe());

    Json cj = Json::object();
    for (size_t i = 0; i < names.size(); ++i) cj[names[i]] = coords_json(coords[i]);
    Json inv = Json::array();
    for (auto& d : analysis.invariant_factors) inv.push_back(z(d));
    return Json{{"sections", names},
                {"expected", want ? "exists" : "not_exists"},
                {"coordinates", cj},
                {"primes", pj},
                {"all_odd_p", analysis.describe()},
                {"invariant_factors", inv}};
}

Json marked_curves(const Session& s, const std::vector<std::string>& arrangement,
                   const std::vector<std::string>& names, std::vector<std::string>& reasons, const std::string& tag) {
    std::vector<std::string> marked;
    for (auto& c : arrangement)
        if (!s.is_branch_component(c)) marked.push_back(c);
    Json out = Json::array();
    for (auto& c : s.scenario().branch)
        if (std::find(arrangement.begin(), arrangement.end(), c) == arrangement.end())
            reasons.push_back(tag + ": branch component " + c + " missing from the arrangement");
    if (marked.size() != names.size()) {
        reasons.push_back(tag + ": " + std::to_string(marked.size()) + " marked curves but " +
                          std::to_string(names.size()) + " sections");
        return out;
    }
    PlaneCurve branch = s.branch();
    for (size_t i = 0; i < marked.size(); ++i) {
        PlaneCurve c = s.curve(marked[i]);
        const Section& sec = s.section(names[i]);
        auto g = c.f.graph_function();
        bool graph_ok = g && !sec.is_zero() && sec.x() == RationalFunction(*g);
        bool even = all_even_tangency(c, branch);
        if (!graph_ok) reasons.push_back(tag + ": " + names[i] + " does not lie over " + marked[i]);
        if (!even) reasons.push_back(tag + ": " + marked[i] + " meets the branch curve with odd multiplicity");
        out.push_back(Json{{"curve", marked[i]}, {"section", names[i]}, {"section_over_curve", graph_ok}, {"even_tangency", even}});
    }
    return out;
}

}  // namespace

Json certify_pair(const Session& s, const PairSpec& pair, int jobs) {
    std::vector<std::string> reasons;
    Json cert;
    cert["tool"] = Json{{"name", "mwl"}, {"version", kToolVersion}};
    cert["scenario"] = scenario_json(s);
    cert["field"] = s.field()->describe();
    cert["model"] = s.model()->to_string();
    cert["presentation"] = presentation_json(s);
    if (!cert["presentation"]["ok"].get<bool>()) reasons.push_back("presentation check failed");

    auto curves_of = [&](const std::vector<std::string>& names) {
        std::vector<PlaneCurve> out;
        for (auto& n : names) out.push_back(s.curve(n));
        return out;
    };
    auto a1 = summarize(curves_of(pair.arrangement1));
    auto a2 = summarize(curves_of(pair.arrangement2));
    bool same = same_combinatorics(a1, a2);
    if (!same) reasons.push_back("combinatorics differ");
    cert["combinatorics"] = Json{{"same", same}, {"arrangement1", summary_json(a1)}, {"arrangement2", summary_json(a2)}};

    cert["marked_curves"] = Json{{"arrangement1", marked_curves(s, pair.arrangement1, pair.sections1, reasons, "arrangement1")},
                                 {"arrangement2", marked_curves(s, pair.arrangement2, pair.sections2, reasons, "arrangement2")}};

    std::vector<long> primes = pair.primes.empty() ? s.scenario().primes : pair.primes;
    for (long p : primes)
        if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, "pair.primes must be odd primes");
    cert["legs"] = Json{{"exists", leg(s, pair.sections1, primes, true, jobs, reasons, "exists leg")},
                        {"not_exists", leg(s, pair.sections2, primes, false, jobs, reasons, "not_exists leg")}};

    // spot checks a reader can redo by hand
    Json spot = Json::array();
    std::vector<std::string> all = pair.sections1;
    for (auto& n : pair.sections2)
        if (std::find(all.begin(), all.end(), n) == all.end()) all.push_back(n);
    for (auto& n : all) {
        const Section& sec = s.section(n);
        bool on = sec.is_zero() || on_curve(*s.model(), sec.x(), sec.y());
        if (!on) reasons.push_back(n + " is not on the curve");
        spot.push_back(Json{{"section", n}, {"on_curve", on}, {"height", q(height(s.surface(), sec))}});
    }
    cert["spot_checks"] = spot;
    cert["replay"] = Json::array({"mwl certify-pair --scenario " + cert["scenario"]["file"].get<std::string>() +
                                      " reproduces this file byte for byte",
                                  "scenario.sha256 is the SHA-256 of the scenario file",
                                  "each exists entry: [p] quotient equals the sum of multipliers times sections",
                                  "each not_exists entry with r <= 3, p <= 7: no vector in [1, p-1]^r works",
                                  "all_odd_p: kernel of the coordinate matrix over Z, see invariant_factors"});
    cert["reasons"] = reasons;
    cert["verdict"] = reasons.empty() ? "Zariski pair certified (topological step quoted, not computed)" : "inconclusive";
    cert["trust_boundary"] =
        "computed: combinatorics surrogate and the cover existence asymmetry; "
        "quoted: existence of dihedral covers implies distinct embedded topology";
    return cert;
}

bool certified(const Json& certificate) { return certificate.value("verdict", "") != "inconclusive"; }

Output cmd_certify_pair(const Session& s, const Options& o) {
    if (!s.scenario().pair) fail(ErrorKind::InvalidInput, s.scenario().name + " declares no [pair]");
    Json cert = certify_pair(s, *s.scenario().pair, o.jobs);
    std::ostringstream os;
    os << s.scenario().name << ": " << cert["verdict"].get<std::string>() << "\n";
    os << "  combinatorics same: " << (cert["combinatorics"]["same"].get<bool>() ? "yes" : "no") << "\n";
    os << "  (" << join(s.scenario().pair->sections1, ", ") << "): " << cert["legs"]["exists"]["all_odd_p"].get<std::string>() << "\n";
    os << "  (" << join(s.scenario().pair->sections2, ", ") << "): " << cert["legs"]["not_exists"]["all_odd_p"].get<std::string>() << "\n";
    for (auto& r : cert["reasons"]) os << "  reason: " << r.get<std::string>() << "\n";
    return {cert, os.str()};
}

}  // namespace mwl::cli
