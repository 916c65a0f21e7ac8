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

#include "scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "expr.hpp"
#include "mwl/error.hpp"
#include "toml.hpp"

namespace mwl::cli {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    fail(ErrorKind::InvalidInput, path + ": " + what);
}

std::string get_string(const toml::node* n, const std::string& path, const std::string& key) {
    if (!n) bad(path, "missing " + key);
    auto s = n->value<std::string>();
    if (!s) bad(path, key + " must be a string");
    return *s;
}

std::vector<std::string> string_list(const toml::node* n, const std::string& path, const std::string& key) {
    std::vector<std::string> out;
    if (!n) return out;
    const toml::array* a = n->as_array();
    if (!a) bad(path, key + " must be an array of strings");
    for (const auto& e : *a) {
        auto s = e.value<std::string>();
        if (!s) bad(path, key + " must be an array of strings");
        out.push_back(*s);
    }
    return out;
}

std::vector<long> long_list(const toml::node* n, const std::string& path, const std::string& key) {
    std::vector<long> out;
    if (!n) return out;
    const toml::array* a = n->as_array();
    if (!a) bad(path, key + " must be an array of integers");
    for (const auto& e : *a) {
        auto v = e.value<int64_t>();
        if (!v) bad(path, key + " must be an array of integers");
        out.push_back(static_cast<long>(*v));
    }
    return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& path) {
    toml::table doc;
    try {
        doc = toml::parse(text, path);
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << e.description() << " at line " << e.source().begin.line;
        bad(path, os.str());
    }
    Scenario sc;
    sc.path = path;
    sc.bytes = text;
    sc.name = get_string(doc.get("name"), path, "name");
    if (auto d = doc["description"].value<std::string>()) sc.description = *d;

    if (const toml::table* f = doc["field"].as_table()) {
        for (auto& c : string_list(f->get("minimal_polynomial"), path, "field.minimal_polynomial"))
            sc.minimal_polynomial.push_back(parse_rational(c));
        if (auto g = (*f)["generator"].value<std::string>()) sc.generator = *g;
        if (sc.minimal_polynomial.size() < 2) bad(path, "field.minimal_polynomial needs degree >= 1");
    }

    const toml::table* curves = doc["curves"].as_table();
    if (!curves) bad(path, "missing [curves]");
    for (auto&& [k, v] : *curves) {
        auto s = v.value<std::string>();
        if (!s) bad(path, "curve " + std::string(k.str()) + " must be a string");
        sc.curves.emplace_back(std::string(k.str()), *s);
    }
    std::set<std::string> curve_names;
    for (auto& c : sc.curves) curve_names.insert(c.first);

    const toml::table* branch = doc["branch"].as_table();
    if (!branch) bad(path, "missing [branch]");
    sc.branch = string_list(branch->get("components"), path, "branch.components");
    if (sc.branch.empty()) bad(path, "branch.components is empty");
    if (auto chi = (*branch)["chi"].value<int64_t>()) sc.chi = static_cast<int>(*chi);
    for (auto& b : sc.branch)
        if (!curve_names.count(b)) bad(path, "branch component " + b + " is not a declared curve");

    std::set<std::string> section_names;
    if (const toml::array* secs = doc["sections"].as_array()) {
        for (const auto& node : *secs) {
            const toml::table* t = node.as_table();
            if (!t) bad(path, "[[sections]] entries must be tables");
            SectionSpec s;
            s.name = get_string(t->get("name"), path, "sections.name");
            if (auto v = (*t)["graph"].value<std::string>()) s.graph = *v;
            if (auto v = (*t)["expr"].value<std::string>()) s.expr = *v;
            if (auto v = (*t)["two_torsion_x"].value<std::string>()) s.two_torsion_x = *v;
            if (auto v = (*t)["sign"].value<std::string>()) s.sign = *v;
            int kinds = !s.graph.empty() + !s.expr.empty() + !s.two_torsion_x.empty();
            if (kinds != 1) bad(path, "section " + s.name + " needs exactly one of graph, expr, two_torsion_x");
            if (s.sign != "plus" && s.sign != "minus") bad(path, "section " + s.name + ": sign must be plus or minus");
            if (!s.graph.empty() && !curve_names.count(s.graph))
                bad(path, "section " + s.name + " refers to unknown curve " + s.graph);
            if (curve_names.count(s.name) || !section_names.insert(s.name).second)
                bad(path, "duplicate label " + s.name);
            sc.sections.push_back(s);
        }
    }
    auto need_section = [&](const std::string& n, const std::string& where) {
        if (!section_names.count(n)) bad(path, where + " refers to unknown section " + n);
    };

    if (const toml::table* p = doc["presentation"].as_table()) {
        sc.has_presentation = true;
        sc.basis = string_list(p->get("basis"), path, "presentation.basis");
        for (auto& b : sc.basis) need_section(b, "presentation.basis");
        if (const toml::array* tors = (*p)["torsion"].as_array()) {
            for (const auto& e : *tors) {
                const toml::array* pr = e.as_array();
                if (!pr || pr->size() != 2) bad(path, "presentation.torsion entries are [name, order]");
                auto name = (*pr)[0].value<std::string>();
                auto order = (*pr)[1].value<int64_t>();
                if (!name || !order || *order < 2) bad(path, "presentation.torsion entries are [name, order]");
                need_section(*name, "presentation.torsion");
                sc.torsion.emplace_back(*name, static_cast<int>(*order));
            }
        }
        if (auto l = (*p)["label"].value<std::string>()) sc.lattice_label = *l;
    }

    if (const toml::table* q = doc["queries"].as_table()) {
        sc.height = string_list(q->get("height"), path, "queries.height");
        sc.dup = string_list(q->get("dup"), path, "queries.dup");
        sc.conics = string_list(q->get("conics"), path, "queries.conics");
        sc.primes = long_list(q->get("primes"), path, "queries.primes");
        if (const toml::array* d = (*q)["divide"].as_array()) {
            for (const auto& e : *d) {
                std::vector<std::string> names = string_list(&e, path, "queries.divide");
                if (names.empty()) bad(path, "queries.divide entries must be nonempty");
                sc.divide.push_back(names);
            }
        }
        for (auto* list : {&sc.height, &sc.dup, &sc.conics})
            for (auto& n : *list) need_section(n, "queries");
        for (auto& d : sc.divide)
            for (auto& n : d) need_section(n, "queries.divide");
        if (!sc.divide.empty() && !sc.has_presentation) bad(path, "queries.divide needs a [presentation]");
    }

    if (const toml::table* p = doc["pair"].as_table()) {
        PairSpec ps;
        ps.arrangement1 = string_list(p->get("arrangement1"), path, "pair.arrangement1");
        ps.arrangement2 = string_list(p->get("arrangement2"), path, "pair.arrangement2");
        ps.sections1 = string_list(p->get("sections1"), path, "pair.sections1");
        ps.sections2 = string_list(p->get("sections2"), path, "pair.sections2");
        ps.primes = long_list(p->get("primes"), path, "pair.primes");
        for (auto* a : {&ps.arrangement1, &ps.arrangement2})
            for (auto& c : *a)
                if (!curve_names.count(c)) bad(path, "pair refers to unknown curve " + c);
        for (auto* a : {&ps.sections1, &ps.sections2}) {
            if (a->empty()) bad(path, "pair sections must be nonempty");
            for (auto& n : *a) need_section(n, "pair");
        }
        if (!sc.has_presentation) bad(path, "[pair] needs a [presentation]");
        sc.pair = ps;
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_scenario(os.str(), path);
}

Session::Session(Scenario sc) : sc_(std::move(sc)) {
    if (sc_.minimal_polynomial.empty())
        base_ = NumberField::rationals();
    else
        base_ = NumberField::make(QPoly(sc_.minimal_polynomial), sc_.generator);
    emb_ = FieldEmbedding::identity(base_);
    for (auto& [name, text] : sc_.curves) curves_[name] = parse_bipoly(text, base_);

    BiPoly q = BiPoly::constant(FieldElem(base_, Rational(1)));
    for (auto& b : sc_.branch) q = q * curves_.at(b);
    model_ = pencil_setup(q, sc_.chi).model;

    for (auto& spec : sc_.sections) {
        Section s;
        if (!spec.graph.empty()) {
            auto c = curves_.at(spec.graph).graph_function();
            if (!c) fail(ErrorKind::InvalidInput, "curve " + spec.graph + " is not of the form x - c(t)");
            GraphLift lift = section_from_graph(model_, emb_(*c));
            adopt(lift);
            s = spec.sign == "plus" ? lift.plus : lift.minus;
            // the lift's sections live on the new model already
        } else if (!spec.two_torsion_x.empty()) {
            Poly r = emb_(parse_poly(spec.two_torsion_x, base_));
            s = Section::make(model_, RationalFunction(r), RationalFunction(Poly(field())));
            if (spec.sign == "minus") s = negate(s);
        } else {
            s = parse_section_expr(spec.expr, sections_, model_);
            if (spec.sign == "minus") s = negate(s);
        }
        sections_[spec.name] = s;
    }
    surface_ = EllipticSurface::make(model_);

    if (sc_.has_presentation) {
        std::vector<TorsionGenerator> tors;
        for (auto& [n, o] : sc_.torsion) tors.push_back(TorsionGenerator{n, section(n), o});
        presentation_ = make_presentation(*surface_, sc_.basis, sections(sc_.basis), tors, sc_.lattice_label);
    }
}

void Session::adopt(const GraphLift& lift) {
    if (lift.embedding.is_identity()) return;
    for (auto& [n, s] : sections_) s = s.map(lift.embedding, lift.model);
    emb_ = emb_.then(lift.embedding);
    model_ = lift.model;
}

const Section& Session::section(const std::string& name) const {
    auto it = sections_.find(name);
    if (it == sections_.end()) fail(ErrorKind::InvalidInput, "unknown section " + name);
    return it->second;
}

std::vector<Section> Session::sections(const std::vector<std::string>& names) const {
    std::vector<Section> out;
    for (auto& n : names) out.push_back(section(n));
    return out;
}

const MWPresentation& Session::presentation() const {
    if (!presentation_) fail(ErrorKind::Precondition, sc_.name + " declares no [presentation]");
    return *presentation_;
}

BiPoly Session::base_curve(const std::string& name) const {
    auto it = curves_.find(name);
    if (it == curves_.end()) fail(ErrorKind::InvalidInput, "unknown curve " + name);
    return it->second;
}

PlaneCurve Session::curve(const std::string& name) const {
    return PlaneCurve::make(name, base_curve(name).map(emb_));
}

PlaneCurve Session::branch() const {
    BiPoly q = BiPoly::constant(FieldElem(base_, Rational(1)));
    std::string label;
    for (auto& b : sc_.branch) {
        q = q * curves_.at(b);
        label += (label.empty() ? "" : "+") + b;
    }
    return PlaneCurve::make(label, q.map(emb_));
}

bool Session::is_branch_component(const std::string& name) const {
    for (auto& b : sc_.branch)
        if (b == name) return true;
    return false;
}

}  // namespace mwl::cli
