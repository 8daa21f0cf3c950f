#include "symmod/json_io.hpp"

#include <sstream>

namespace symmod {

Json poly_to_json(const SparsePoly& p) {
    Json j;
    j["nvars"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [exp, c] : p.terms()) {
        Json t;
        t["exp"] = exp;
        t["coef"] = rat_str(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SparsePoly poly_from_json(const Json& j) {
    SparsePoly p(j.at("nvars").get<int>());
    for (const Json& t : j.at("terms")) {
        std::vector<int> exp = t.at("exp").get<std::vector<int>>();
        p.add_term(exp, parse_rational(t.at("coef").get<std::string>()));
    }
    return p;
}

Json chartable_to_json(const CharacterTable& t) {
    Json j;
    j["n"] = t.n;
    Json classes = Json::array();
    for (const Partition& c : t.classes) classes.push_back(c.parts());
    j["classes"] = std::move(classes);
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.row_partitions.size(); ++r) {
        Json row;
        row["partition"] = t.row_partitions[r].parts();
        row["values"] = t.chi[r];
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string chartable_to_csv(const CharacterTable& t) {
    std::ostringstream os;
    os << "partition";
    for (const Partition& c : t.classes) os << ',' << '"' << c.str() << '"';
    os << '\n';
    for (std::size_t r = 0; r < t.row_partitions.size(); ++r) {
        os << '"' << t.row_partitions[r].str() << '"';
        for (long long v : t.chi[r]) os << ',' << v;
        os << '\n';
    }
    return os.str();
}

namespace {

std::string scalar_str(const Rat& x) { return rat_str(x); }
double scalar_str(double x) { return x; }  // numbers stay numeric in JSON

} // namespace

template <class S>
Json irrep_to_json(const IrrepTable<S>& t) {
    Json j;
    j["n"] = t.n;
    j["partition"] = t.p.parts();
    j["dim"] = t.dim;
    j["form"] = form_name(t.form);
    Json mats;
    for (const auto& [perm, mat] : t.mats) {
        Json rows = Json::array();
        for (int r = 0; r < mat.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < mat.cols; ++c) row.push_back(scalar_str(mat(r, c)));
            rows.push_back(std::move(row));
        }
        mats[perm.one_line()] = std::move(rows);
    }
    j["matrices"] = std::move(mats);
    return j;
}

template Json irrep_to_json<Rat>(const IrrepTable<Rat>&);
template Json irrep_to_json<double>(const IrrepTable<double>&);

Json kernel_to_json(const KernelSeries& k) {
    Json j;
    j["kernel"] = k.kind;
    j[k.kind == "B_Gn" ? "mu" : "lambda"] = rat_str(k.weight);
    j["n"] = k.n;
    j["degree_cap"] = k.degree_cap;
    j["coordinates"] = k.coord == Coord::U ? "elementary" : "polydisc";
    Json terms = Json::array();
    for (const KernelTerm& t : k.terms) {
        Json term;
        if (k.kind == "B_Gn") {
            Json part = Json::array();
            for (int v : t.label)
                if (v > 0) part.push_back(v);
            term["partition"] = std::move(part);
            term["gamma_sq"] = rat_str(t.coef);
        } else {
            term["orbit"] = t.label;
            term["coef"] = rat_str(t.coef);
        }
        term["factor"] = poly_to_json(t.factor);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json report_to_json(const CheckReport& r) {
    Json j;
    j["check"] = r.check;
    j["n"] = r.n;
    j["d"] = r.d;
    j["form"] = r.form;
    j["max_deviation"] = r.max_deviation;
    j["pass"] = r.pass;
    return j;
}

std::string report_to_csv(const CheckReport& r) {
    std::ostringstream os;
    os << r.check << ',' << r.n << ',' << r.d << ',' << r.form << ',' << r.max_deviation << ','
       << (r.pass ? "true" : "false");
    return os.str();
}

Json orth_to_json(const OrthReport& r) {
    Json j;
    j["check"] = "orthogonality";
    j["n"] = r.n;
    j["p"] = r.p.parts();
    j["q"] = r.q.parts();
    j["form"] = form_name(r.form);
    j["max_deviation"] = r.max_deviation;
    j["pass"] = r.pass;
    return j;
}

Json artin_to_json(const ArtinCheckResult& r) {
    Json j;
    j["check"] = "basis_determinant";
    j["n"] = r.n;
    Json ratios = Json::array();
    for (const Rat& x : r.ratios) ratios.push_back(rat_str(x));
    j["ratios"] = std::move(ratios);
    j["constant"] = r.constant;
    j["degree_ok"] = r.degree_ok;
    j["pass"] = r.pass;
    return j;
}

Json witness_to_json(const InequivalenceWitness& w) {
    Json j;
    j["check"] = "coefficient_witness";
    j["n"] = w.n;
    j["lambda"] = rat_str(w.lambda);
    j["coef_sym_q1"] = rat_str(w.coef_sym_q1);
    j["coef_bergman_q1"] = rat_str(w.coef_bergman_q1);
    j["differ"] = w.differ;
    j["mu_from_q1"] = rat_str(w.mu_from_q1);
    j["mu_admissible"] = w.mu_admissible;
    j["system_solvable"] = w.system_solvable;
    return j;
}

Json crosscheck_to_json(const PermanentCrosscheck& c) {
    Json j;
    j["check"] = "permanent_crosscheck";
    j["n"] = c.n;
    j["d"] = c.d;
    j["lambda"] = rat_str(c.lambda);
    j["pass"] = c.match;
    return j;
}

Json curvature_to_json(const CurvatureComparison& c) {
    Json j;
    j["check"] = "curvature_compare";
    j["n"] = c.n;
    j["lambda"] = rat_str(c.lambda);
    Json pts = Json::array();
    for (const auto& z : c.z_points) {
        Json pt = Json::array();
        for (const auto& v : z) pt.push_back(Json::array({v.real(), v.imag()}));
        pts.push_back(std::move(pt));
    }
    j["points"] = std::move(pts);
    j["max_diff"] = c.max_diff;
    j["richardson_err"] = c.richardson_err;
    j["hermiticity_dev"] = c.hermiticity_dev;
    j["verdict"] = c.verdict;
    return j;
}

std::vector<std::vector<std::complex<double>>> parse_points(const Json& j, int n) {
    std::vector<std::vector<std::complex<double>>> out;
    if (!j.is_array()) throw std::invalid_argument("points must be a JSON array");
    for (const Json& pt : j) {
        if (!pt.is_array() || static_cast<int>(pt.size()) != n)
            throw std::invalid_argument("each point must be an array of n coordinates");
        std::vector<std::complex<double>> p;
        for (const Json& c : pt) {
            if (c.is_string()) {
                p.emplace_back(to_double(parse_rational(c.get<std::string>())), 0.0);
            } else if (c.is_number()) {
                p.emplace_back(c.get<double>(), 0.0);
            } else if (c.is_array() && c.size() == 2) {
                double re = c[0].is_string() ? to_double(parse_rational(c[0].get<std::string>()))
                                             : c[0].get<double>();
                double im = c[1].is_string() ? to_double(parse_rational(c[1].get<std::string>()))
                                             : c[1].get<double>();
                p.emplace_back(re, im);
            } else {
                throw std::invalid_argument("coordinate must be rational string or [re,im] pair");
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace symmod
