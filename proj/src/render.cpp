#include "frobtsct/render.hpp"

#include <cctype>
#include <sstream>

namespace frobtsct {

namespace {

Json rep_json(const Elt& e) { return Json::array({e.f1, e.f2, e.j}); }

Json col_json(const ClassCol& c) {
    Json j;
    j["name"] = c.name;
    j["rep"] = rep_json(c.rep);
    j["size"] = c.size;
    j["order"] = c.elt_order;
    return j;
}

std::string latex_escape_name(const std::string& s) {
    // chi_12 -> \chi_{12}, xi_3 -> \xi_{3}, theta_2, Phi_4, nu_1
    auto us = s.find('_');
    if (us == std::string::npos) return s;
    return "\\" + s.substr(0, us) + "_{" + s.substr(us + 1) + "}";
}

std::string latex_shape(const std::string& shape) {
    // "(C3 x C3) : C8" -> "(C_{3} \times C_{3}) \rtimes C_{8}"
    std::string out;
    for (size_t i = 0; i < shape.size();) {
        if (shape[i] == 'C' && i + 1 < shape.size() && std::isdigit((unsigned char)shape[i + 1])) {
            size_t j = i + 1;
            while (j < shape.size() && std::isdigit((unsigned char)shape[j])) ++j;
            out += "C_{" + shape.substr(i + 1, j - i - 1) + "}";
            i = j;
        } else if (shape.compare(i, 3, " x ") == 0) {
            out += " \\times ";
            i += 3;
        } else if (shape.compare(i, 3, " : ") == 0) {
            out += " \\rtimes ";
            i += 3;
        } else {
            out += shape[i++];
        }
    }
    return out;
}

} // namespace

Json spec_json(const FrobSpec& spec) {
    Json j;
    j["p"] = spec.p;
    j["m"] = spec.m;
    j["case"] = fusion_name(spec.fusion);
    j["order"] = spec.order();
    j["shape"] = spec.shape();
    j["num_vertices"] = spec.num_vertices();
    return j;
}

Json chartab_json(const CharTable& X) {
    Json j;
    j["group"] = X.group_name;
    j["order"] = X.group_order;
    Json cols = Json::array();
    for (const auto& c : X.cols) cols.push_back(col_json(c));
    j["columns"] = cols;
    Json rows = Json::array();
    for (size_t i = 0; i < X.vals.size(); ++i) {
        Json r;
        r["name"] = X.row_names[i];
        Json vals = Json::array();
        for (const auto& x : X.vals[i]) vals.push_back(x.to_atom());
        r["values"] = vals;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

Json dec_json(const DecMatrix& dec) {
    Json j;
    j["rows"] = dec.row_names;
    j["columns"] = dec.col_names;
    Json e = Json::array();
    for (const auto& row : dec.entries) e.push_back(row);
    j["entries"] = e;
    return j;
}

Json tsct_json(const TSCT& t) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : t.vertices) {
        Json x;
        x["index"] = v.index;
        x["order"] = v.order;
        x["normalizer_order"] = v.normalizer_order;
        x["shape"] = v.shape;
        verts.push_back(x);
    }
    j["vertices"] = verts;

    Json labels = Json::array();
    for (const auto& per_vertex : t.row_labels) {
        Json lv = Json::array();
        for (const auto& lab : per_vertex) lv.push_back(row_label_str(lab));
        labels.push_back(lv);
    }
    j["row_labels"] = labels;

    Json cols = Json::array();
    for (const auto& per_vertex : t.col_labels) {
        Json cv = Json::array();
        for (const auto& c : per_vertex) cv.push_back(col_json(c));
        cols.push_back(cv);
    }
    j["columns"] = cols;

    Json blocks = Json::array();
    const int r = t.num_vertices();
    for (int i = 1; i <= r; ++i)
        for (int v = 1; v <= r; ++v) {
            Json b;
            b["i"] = i;
            b["v"] = v;
            Json rows = Json::array();
            for (const auto& row : t.blocks[i - 1][v - 1]) {
                Json jr = Json::array();
                for (const auto& x : row) jr.push_back(x.to_atom());
                rows.push_back(jr);
            }
            b["entries"] = rows;
            blocks.push_back(b);
        }
    j["blocks"] = blocks;
    return j;
}

Json report_json(const Report& rep) {
    Json j;
    j["ok"] = rep.ok();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json x;
        x["name"] = c.name;
        x["ok"] = c.ok;
        x["detail"] = c.detail;
        checks.push_back(x);
    }
    j["checks"] = checks;
    return j;
}

Json document_json(const std::string& kind, const FrobSpec& spec, const Json& body) {
    Json j;
    j["schema"] = "frobtsct/1";
    j["kind"] = kind;
    j["spec"] = spec_json(spec);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    return j;
}

std::string json_string(const Json& j) { return j.dump(2) + "\n"; }

std::string chartab_csv(const CharTable& X) {
    std::ostringstream os;
    os << "name";
    for (const auto& c : X.cols) os << "," << c.name;
    os << "\n";
    os << "size";
    for (const auto& c : X.cols) os << "," << c.size;
    os << "\n";
    for (size_t i = 0; i < X.vals.size(); ++i) {
        os << X.row_names[i];
        for (const auto& x : X.vals[i]) os << "," << x.to_atom();
        os << "\n";
    }
    return os.str();
}

std::string dec_csv(const DecMatrix& dec) {
    std::ostringstream os;
    os << "name";
    for (const auto& c : dec.col_names) os << "," << c;
    os << "\n";
    for (size_t i = 0; i < dec.entries.size(); ++i) {
        os << dec.row_names[i];
        for (long v : dec.entries[i]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::string tsct_csv(const TSCT& t) {
    std::ostringstream os;
    os << "i,v,row_label";
    os << "\n";
    const int r = t.num_vertices();
    for (int i = 1; i <= r; ++i)
        for (int v = 1; v <= r; ++v) {
            const auto& blk = t.blocks[i - 1][v - 1];
            os << "# block " << i << "," << v << " columns";
            for (const auto& c : t.col_labels[v - 1]) os << "," << c.name;
            os << "\n";
            for (size_t row = 0; row < blk.size(); ++row) {
                os << i << "," << v << "," << row_label_str(t.row_labels[i - 1][row]);
                for (const auto& x : blk[row]) os << "," << x.to_atom();
                os << "\n";
            }
        }
    return os.str();
}

std::string report_text(const Report& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << (rep.ok() ? "all checks passed" : "verification failed") << "\n";
    return os.str();
}

std::string latex_value(const Cyclotomic& x) {
    Cyclotomic v = x.reduced();
    if (v.is_rational()) {
        Rational q = v.rational_value();
        if (is_integral(q)) return q.get_str();
        std::string num = Integer(q.get_num()).get_str();
        std::string den = Integer(q.get_den()).get_str();
        bool neg = !num.empty() && num[0] == '-';
        if (neg) num = num.substr(1);
        return (neg ? std::string("-") : std::string()) + "\\tfrac{" + num + "}{" + den + "}";
    }
    const long n = v.conductor();
    std::ostringstream os;
    bool first = true;
    const auto& c = v.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rational q = c[k];
        bool neg = q < 0;
        if (neg) q = -q;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string coeff;
        if (is_integral(q))
            coeff = Integer(q.get_num()).get_str();
        else
            coeff = "\\tfrac{" + Integer(q.get_num()).get_str() + "}{" + Integer(q.get_den()).get_str() + "}";
        if (k == 0) {
            os << coeff;
        } else {
            if (coeff != "1") os << coeff << " ";
            os << "\\zeta_{" << n << "}";
            if (k > 1) os << "^{" << k << "}";
        }
    }
    return os.str();
}

std::string chartab_latex(const CharTable& X) {
    std::ostringstream os;
    os << "\\begin{array}{r|" << std::string(X.cols.size(), 'c') << "}\n";
    for (const auto& c : X.cols) os << " & " << c.name;
    os << " \\\\\n\\hline\n";
    for (size_t i = 0; i < X.vals.size(); ++i) {
        os << latex_escape_name(X.row_names[i]);
        for (const auto& x : X.vals[i]) os << " & " << latex_value(x);
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

std::string dec_latex(const DecMatrix& dec) {
    std::ostringstream os;
    os << "\\begin{array}{r|" << std::string(dec.col_names.size(), 'c') << "}\n";
    for (const auto& c : dec.col_names) os << " & " << latex_escape_name(c);
    os << " \\\\\n\\hline\n";
    for (size_t i = 0; i < dec.entries.size(); ++i) {
        os << latex_escape_name(dec.row_names[i]);
        for (long v : dec.entries[i]) os << " & " << v;
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

std::string tsct_latex(const TSCT& t) {
    std::ostringstream os;
    const int r = t.num_vertices();
    os << "\\begin{array}{r|";
    for (const auto& cv : t.col_labels) os << std::string(cv.size(), 'c') << "|";
    os << "}\n";
    for (int v = 1; v <= r; ++v)
        os << " & \\multicolumn{" << t.col_labels[v - 1].size() << "}{c|}{N_{" << v
           << "} \\cong " << latex_shape(t.vertices[v - 1].shape) << "}";
    os << " \\\\\n";
    for (const auto& cv : t.col_labels)
        for (const auto& c : cv) os << " & " << c.name;
    os << " \\\\\n\\hline\n";
    for (int i = 1; i <= r; ++i) {
        for (size_t row = 0; row < t.row_labels[i - 1].size(); ++row) {
            std::string lab;
            for (size_t k = 0; k < t.row_labels[i - 1][row].size(); ++k) {
                if (k) lab += "+";
                lab += "\\chi_{" + std::to_string(t.row_labels[i - 1][row][k]) + "}";
            }
            os << lab;
            for (int v = 1; v <= r; ++v)
                for (const auto& x : t.blocks[i - 1][v - 1][row]) os << " & " << latex_value(x);
            os << " \\\\\n";
        }
        os << "\\hline\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

} // namespace frobtsct
