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

#include "verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "expr.hpp"
#include "mwl/error.hpp"
#include "toml.hpp"

namespace mwl::cli {

namespace fs = std::filesystem;

namespace {

class Checker {
   public:
    explicit Checker(VerifyResult& r) : r_(r) {}

    template <class A, class B>
    void equal(const std::string& key, const A& expected, const B& got) {
        ++r_.checked;
        if (!(expected == got)) r_.failures.push_back(key + ": expected " + show(expected) + ", got " + show(got));
    }
    void expect(const std::string& key, bool ok, const std::string& detail) {
        ++r_.checked;
        if (!ok) r_.failures.push_back(key + ": " + detail);
    }

   private:
    template <class T>
    static std::string show(const T& v) {
        if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
            std::string s = "[";
            for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
            return s + "]";
        } else {
            std::ostringstream os;
            os << v;
            return os.str();
        }
    }
    VerifyResult& r_;
};

std::string str(const toml::node& n, const std::string& key) {
    auto v = n.value<std::string>();
    if (!v) fail(ErrorKind::InvalidInput, "golden " + key + " must be a string");
    return *v;
}

std::vector<std::string> strs(const toml::node* n, const std::string& key) {
    std::vector<std::string> out;
    if (!n) return out;
    const toml::array* a = n->as_array();
    if (!a) fail(ErrorKind::InvalidInput, "golden " + key + " must be an array");
    for (auto& e : *a) out.push_back(str(e, key));
    return out;
}

void check_dup(const Session& s, const std::string& name, const toml::table& g, Checker& c, VerifyResult& r) {
    std::string key = "dup." + name;
    Section d = smul(2, s.section(name));
    bool informational = g["informational"].value_or(false);
    if (auto deg = g["x_degree"].value<int64_t>()) {
        bool poly = !d.is_zero() && d.x().is_polynomial();
        c.equal(key + ".x_degree", static_cast<int>(*deg), poly ? d.x().num().degree() : -1);
    }
    if (g["on_curve"].value_or(false))
        c.expect(key + ".on_curve", !d.is_zero() && on_curve(*s.model(), d.x(), d.y()), "not on the curve");
    if (d.is_zero()) {
        c.expect(key, false, "[2]" + name + " is O");
        return;
    }
    auto compare = [&](const std::string& part, bool up_to_sign, const RationalFunction& got) {
        auto text = g[part].value<std::string>();
        if (!text) return;
        RationalFunction want(parse_poly(*text, s.field()));
        bool same = got == want || (up_to_sign && got == -want);
        std::string line = key + "." + part + ": golden " + want.to_string() + ", computed " + got.to_string();
        if (informational) {
            r.notes.push_back(std::string(same ? "agrees" : "differs") + " (informational) " + line);
        } else {
            c.expect(key + "." + part, same, "expected " + want.to_string() + ", got " + got.to_string());
        }
    };
    compare("x", false, d.x());
    compare("y", true, d.y());
}

}  // namespace

std::vector<std::string> bundled_scenarios(const std::string& dir) {
    std::vector<std::string> out;
    if (!fs::is_directory(dir)) fail(ErrorKind::InvalidInput, "no scenario directory " + dir);
    for (auto& e : fs::directory_iterator(dir)) {
        std::string n = e.path().filename().string();
        if (e.path().extension() == ".toml" && n.find(".golden.") == std::string::npos) out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

VerifyResult verify_scenario(const std::string& scenario_path, int jobs) {
    VerifyResult r;
    fs::path p(scenario_path);
    r.scenario = p.stem().string();
    fs::path golden_path = p.parent_path() / (p.stem().string() + ".golden.toml");
    Checker c(r);
    try {
        Scenario sc = load_scenario(scenario_path);
        r.scenario = sc.name;
        if (!fs::exists(golden_path)) fail(ErrorKind::InvalidInput, "missing golden file " + golden_path.string());
        toml::table g;
        try {
            g = toml::parse_file(golden_path.string());
        } catch (const toml::parse_error& e) {
            fail(ErrorKind::InvalidInput, golden_path.string() + ": " + std::string(e.description()));
        }
        Session s(sc);
        const auto& S = s.surface();

        if (auto deg = g["field"]["degree"].value<int64_t>())
            c.equal("field.degree", static_cast<int>(*deg), s.field()->degree());

        if (const toml::table* f = g["fibers"].as_table()) {
            Json fj = cmd_fibers(s).json;
            if (auto v = (*f)["euler_total"].value<int64_t>()) c.equal("fibers.euler_total", static_cast<int>(*v), fj["euler_total"].get<int>());
            if (auto v = (*f)["reducible_count"].value<int64_t>())
                c.equal("fibers.reducible_count", static_cast<int>(*v), fj["reducible_count"].get<int>());
            auto got = fj["reducible_types"].get<std::vector<std::string>>();
            if (f->contains("reducible_types")) c.equal("fibers.reducible_types", strs(f->get("reducible_types"), "fibers.reducible_types"), got);
            for (auto& t : strs(f->get("contains"), "fibers.contains"))
                c.expect("fibers.contains." + t, std::find(got.begin(), got.end(), t) != got.end(), "no " + t + " fiber");
        }

        if (const toml::table* h = g["heights"].as_table()) {
            for (auto&& [k, v] : *h) {
                std::string name(k.str());
                c.equal("heights." + name, str(v, "heights." + name), to_string(height(S, s.section(name))));
            }
        }

        if (const toml::table* gr = g["gram"].as_table()) {
            auto names = strs(gr->get("sections"), "gram.sections");
            RatMatrix m = gram(S, s.sections(names));
            const toml::array* rows = (*gr)["matrix"].as_array();
            if (!rows || rows->size() != names.size()) fail(ErrorKind::InvalidInput, "golden gram.matrix has the wrong shape");
            for (size_t i = 0; i < names.size(); ++i) {
                auto row = strs(rows->get(i), "gram.matrix");
                if (row.size() != names.size()) fail(ErrorKind::InvalidInput, "golden gram.matrix has the wrong shape");
                for (size_t j = 0; j < names.size(); ++j)
                    c.equal("gram[" + names[i] + "," + names[j] + "]", row[j], to_string(m[i][j]));
            }
        }

        if (const toml::table* pr = g["presentation"].as_table()) {
            auto rep = verify_presentation(S, s.presentation());
            if (auto v = (*pr)["ok"].value<bool>()) c.equal("presentation.ok", *v, rep.ok);
            if (auto v = (*pr)["det_gram"].value<std::string>()) c.equal("presentation.det_gram", *v, to_string(rep.det_gram));
            if (auto v = (*pr)["index_squared"].value<std::string>())
                c.equal("presentation.index_squared", *v, to_string(rep.index_squared));
            if (auto v = (*pr)["label"].value<std::string>()) c.equal("presentation.label", *v, s.presentation().lattice_label);
        }

        if (const toml::table* d = g["dup"].as_table()) {
            for (auto&& [k, v] : *d) {
                const toml::table* t = v.as_table();
                if (!t) fail(ErrorKind::InvalidInput, "golden dup entries are tables");
                check_dup(s, std::string(k.str()), *t, c, r);
            }
        }

        if (const toml::table* cs = g["conics"].as_table()) {
            const auto& names = sc.conics;
            auto conics = tangent_conics_through(S, s.branch(), s.sections(names));
            int count = 0;
            for (auto& tc : conics) count += tc.conic.has_value();
            if (auto v = (*cs)["count"].value<int64_t>()) c.equal("conics.count", static_cast<int>(*v), count);
            for (auto&& [k, v] : *cs) {
                std::string name(k.str());
                if (name == "count") continue;
                auto it = std::find(names.begin(), names.end(), name);
                if (it == names.end()) fail(ErrorKind::InvalidInput, "golden conic " + name + " is not in queries.conics");
                const auto& tc = conics[it - names.begin()];
                BiPoly want = parse_bipoly(str(v, "conics." + name), s.field());
                c.expect("conics." + name, tc.conic && tc.conic->f == want,
                         "expected " + want.to_string() + ", got " + (tc.conic ? tc.conic->f.to_string() : tc.error));
            }
        }

        if (const toml::array* divs = g["divide"].as_array()) {
            const auto& pres = s.presentation();
            for (auto& node : *divs) {
                const toml::table* t = node.as_table();
                if (!t) fail(ErrorKind::InvalidInput, "golden [[divide]] entries are tables");
                auto names = strs(t->get("sections"), "divide.sections");
                std::string key = "divide(";
                for (size_t i = 0; i < names.size(); ++i) key += (i ? "," : "") + names[i];
                key += ")";
                std::vector<Coordinates> coords;
                for (auto& n : names) coords.push_back(coordinates_of(S, pres, s.section(n)));
                if (const toml::table* ex = (*t)["exists"].as_table()) {
                    for (auto&& [pk, pv] : *ex) {
                        long p = std::stol(std::string(pk.str()));
                        auto want = pv.value<bool>();
                        if (!want) fail(ErrorKind::InvalidInput, "golden divide.exists values are booleans");
                        c.equal(key + ".p" + std::to_string(p), *want, cover_from_coordinates(pres, coords, p).exists);
                    }
                }
                if (auto v = (*t)["all_odd_p"].value<std::string>())
                    c.equal(key + ".all_odd_p", *v, odd_prime_analysis_from_coordinates(pres, coords).describe());
            }
        }

        if (const toml::table* pr = g["pair"].as_table()) {
            if (!sc.pair) fail(ErrorKind::InvalidInput, "golden [pair] but the scenario has none");
            Json cert = certify_pair(s, *sc.pair, jobs);
            if (auto v = (*pr)["same_combinatorics"].value<bool>())
                c.equal("pair.same_combinatorics", *v, cert["combinatorics"]["same"].get<bool>());
            if (auto v = (*pr)["verdict"].value<std::string>())
                c.equal("pair.verdict", *v, std::string(certified(cert) ? "certified" : "inconclusive"));
        }
    } catch (const Error& e) {
        r.failures.push_back(std::string("error ") + kind_name(e.kind()) + ": " + e.what());
    }
    return r;
}

}  // namespace mwl::cli
