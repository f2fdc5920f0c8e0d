#include "mixchrom/decomposition.hpp"

#include "json_detail.hpp"
#include "mixchrom/errors.hpp"
#include "mixchrom/order_poly.hpp"

namespace mixchrom {

namespace {

void check_bound(const MixedGraph& g, std::size_t bound) {
    if (g.vertex_count() > bound) {
        throw BoundError("decomposition limit: " + std::to_string(g.vertex_count()) + " vertices exceeds " +
                         std::to_string(bound));
    }
}

} // namespace

DecompositionReport decomposition_report(const MixedGraph& g, std::size_t bound) {
    check_bound(g, bound);
    DecompositionReport report;
    const auto flats = enumerate_flats(g);
    for (std::size_t i = 0; i < flats.size(); ++i) {
        const Flat& flat = flats[i];
        DecompositionFlat summary;
        summary.partition = describe_partition(g, flat);
        for (Vertex v : flat.contracted) {
            summary.contracted.push_back(flat.quotient.name(v));
        }
        const auto orientations = enumerate_acyclic_orientations(underlying(flat.quotient));
        summary.orientation_count = orientations.size();
        for (const auto& sigma : orientations) {
            const BicoloredPoset poset = poset_from_orientation(flat, sigma);
            DecompositionRow row;
            row.flat_index = i;
            row.partition = summary.partition;
            for (const auto& a : sigma.directed) {
                row.directed.push_back(sigma.graph.name(a.tail) + "->" + sigma.graph.name(a.head));
            }
            for (Vertex v = 0; v < poset.size(); ++v) {
                if (poset.is_celeste(v)) {
                    row.celeste.push_back(poset.name(v));
                }
            }
            row.omega = omega_strict(poset, bound);
            report.total += row.omega;
            report.rows.push_back(std::move(row));
        }
        report.flats.push_back(std::move(summary));
    }
    return report;
}

Polynomial chi_by_decomposition(const MixedGraph& g, std::size_t bound) {
    check_bound(g, bound);
    Polynomial total;
    for (const Flat& flat : enumerate_flats(g)) {
        for (const auto& sigma : enumerate_acyclic_orientations(underlying(flat.quotient))) {
            total += omega_strict(poset_from_orientation(flat, sigma), bound);
        }
    }
    return total;
}

Polynomial chi_undirected_decomposition(const MixedGraph& g, std::size_t bound) {
    if (!g.arcs().empty()) {
        throw GraphError("undirected decomposition requires a graph without arcs");
    }
    return chi_by_decomposition(g, bound);
}

namespace {

std::string join(const std::vector<std::string>& items, const char* separator) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) {
            out += separator;
        }
        out += items[i];
    }
    return out;
}

} // namespace

std::string report_to_text(const DecompositionReport& report, Format polynomial_format) {
    std::string out;
    std::size_t row = 0;
    for (std::size_t i = 0; i < report.flats.size(); ++i) {
        const auto& flat = report.flats[i];
        out += "flat " + std::to_string(i + 1) + " " + flat.partition + "  C(H) = {" + join(flat.contracted, ",") +
               "}  orientations: " + std::to_string(flat.orientation_count) + "\n";
        for (; row < report.rows.size() && report.rows[row].flat_index == i; ++row) {
            const auto& r = report.rows[row];
            out += "  [" + join(r.directed, ", ") + "]  celeste {" + join(r.celeste, ",") + "}  " +
                   render(r.omega, polynomial_format) + "\n";
        }
    }
    out += "rows: " + std::to_string(report.rows.size()) + "\n";
    out += "total: " + render(report.total, polynomial_format) + "\n";
    return out;
}

std::string report_to_json(const DecompositionReport& report) {
    nlohmann::ordered_json flats = nlohmann::ordered_json::array();
    for (const auto& flat : report.flats) {
        flats.push_back({{"partition", flat.partition},
                         {"contracted", flat.contracted},
                         {"orientations", flat.orientation_count}});
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"flat", r.flat_index},
                        {"partition", r.partition},
                        {"orientation", r.directed},
                        {"celeste", r.celeste},
                        {"polynomial", detail::polynomial_to_json(r.omega)}});
    }
    nlohmann::ordered_json j = {{"flats", std::move(flats)},
                        {"rows", std::move(rows)},
                        {"total", detail::polynomial_to_json(report.total)}};
    return j.dump(2);
}

} // namespace mixchrom
