#include "kwong/serialize.hpp"

#include <cmath>
#include <sstream>

namespace kwong {

namespace {

std::string entry_text(const Rational& v) { return to_string(v); }
std::string entry_text(double v) { return format_double(v); }

template <class T>
std::string matrix_csv(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += entry_text(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <class T>
json matrix_entries(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<T, Rational>)
                row.push_back(to_string(m(i, j)));
            else
                row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
json points_json(const Points<T>& pts) {
    json out = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if constexpr (std::is_same_v<T, Rational>)
            out.push_back(to_string(pts[i]));
        else
            out.push_back(pts[i]);
    }
    return out;
}

template <class T>
json family_spec_json(const FamilySpec<T>& spec) {
    json out;
    out["family"] = family_name(spec.family);
    out["points"] = points_json(spec.points);
    if (spec.second_points) out["second_points"] = points_json(*spec.second_points);
    if (spec.r.is_integer())
        out["r"] = spec.r.as_integer();
    else
        out["r"] = spec.r.value();
    return out;
}

template <class T>
json sym_matrix_json(const SymMatrix<T>& m) {
    json out;
    out["order"] = m.order();
    out["mode"] = std::is_same_v<T, Rational> ? "exact" : "binary64";
    out["entries"] = matrix_entries(m.dense());
    if (m.provenance()) out["provenance"] = family_spec_json(*m.provenance());
    return out;
}

json finite_or_text(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

} // namespace

std::string to_csv(const Matrix<Rational>& m) { return matrix_csv(m); }
std::string to_csv(const Matrix<double>& m) { return matrix_csv(m); }
std::string to_csv(const SymMatrix<Rational>& m) { return matrix_csv(m.dense()); }
std::string to_csv(const SymMatrix<double>& m) { return matrix_csv(m.dense()); }

json to_json(const Inertia& in) { return json::array({in.positive, in.zero, in.negative}); }

json to_json(const FamilySpec<Rational>& spec) { return family_spec_json(spec); }
json to_json(const FamilySpec<double>& spec) { return family_spec_json(spec); }

json to_json(const SymMatrix<Rational>& m) { return sym_matrix_json(m); }
json to_json(const SymMatrix<double>& m) { return sym_matrix_json(m); }

json to_json(const Matrix<Rational>& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"mode", "exact"},
                {"entries", matrix_entries(m)}};
}

json to_json(const Matrix<double>& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"mode", "binary64"},
                {"entries", matrix_entries(m)}};
}

json to_json(const PivotLog& log) {
    json events = json::array();
    for (const PivotEvent& ev : log.events) {
        json e;
        if (ev.kind == PivotEvent::Kind::Diag) {
            e["kind"] = "diag";
            e["index"] = ev.index;
            e["pivot"] = to_string(ev.value);
        } else {
            e["kind"] = "block2x2";
            e["indices"] = json::array({ev.index, ev.second_index});
            e["block_det"] = to_string(ev.value);
        }
        events.push_back(std::move(e));
    }
    return json{{"events", std::move(events)}, {"zero_block_dim", log.zero_block_dim}};
}

json to_json(const SpectrumReport& rep) {
    json eigs = json::array();
    for (double v : rep.eigenvalues) eigs.push_back(v);
    return json{{"eigenvalues", std::move(eigs)},
                {"zero_threshold", rep.zero_threshold},
                {"inertia", to_json(rep.inertia)},
                {"gap_ratio", finite_or_text(rep.gap_ratio)},
                {"route", route_name(rep.route)},
                {"converged", rep.converged}};
}

json to_json(const PredictionCase& pred, int n, double r) {
    return json{{"n", n},
                {"r", r},
                {"caseTag", pred.tag_label()},
                {"inertia", to_json(pred.inertia)}};
}

json to_json(const SsrReport& rep) {
    json orders = json::array();
    for (const OrderVerdict& v : rep.orders) {
        json o;
        o["order"] = v.order;
        o["uniform"] = v.uniform;
        if (v.uniform) o["sign"] = v.sign;
        json witnesses = json::array();
        for (const MinorWitness& w : v.witnesses) {
            witnesses.push_back(json{{"rows", w.rows},
                                     {"cols", w.cols},
                                     {"value", to_string(w.value)}});
        }
        if (!witnesses.empty()) o["witnesses"] = std::move(witnesses);
        orders.push_back(std::move(o));
    }
    return json{{"orders", std::move(orders)}, {"sign_regular", rep.sign_regular}};
}

json to_json(const SweepRecord& rec) {
    json eigs = json::array();
    for (double v : rec.eigenvalues) eigs.push_back(v);
    return json{{"r", rec.r},
                {"eigenvalues", std::move(eigs)},
                {"inertia", to_json(rec.inertia)},
                {"route", route_name(rec.route)}};
}

json to_json(const TransitionReport& rep) {
    return json{{"bracket", json::array({rep.r_lo, rep.r_hi})},
                {"inertia_before", to_json(rep.before)},
                {"inertia_after", to_json(rep.after)},
                {"refined_location", rep.refined_location},
                {"width", rep.width}};
}

} // namespace kwong
