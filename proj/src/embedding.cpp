#include "scd/embedding.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "scd/error.hpp"
#include "scd/graph.hpp"

namespace scd {

std::string to_string(Backend b) { return b == Backend::netmf ? "netmf" : "ppr"; }

Backend backend_from_string(const std::string& s) {
    if (s == "netmf") return Backend::netmf;
    if (s == "ppr") return Backend::ppr;
    throw ConfigError("backend: unknown embedding backend '" + s + "' (expected netmf or ppr)");
}

void EmbeddingParams::validate() const {
    if (window < 1) throw ConfigError("window: must be >= 1");
    if (negative < 1) throw ConfigError("negative: must be >= 1");
    if (dimension < 1) throw ConfigError("dimension: must be >= 1");
}

std::string EmbeddingParams::describe() const {
    std::ostringstream os;
    if (backend == Backend::netmf)
        os << "netmf(T=" << window << ",b=" << negative << ",d=" << dimension << ")";
    else
        os << "ppr";
    return os.str();
}

void write_embedding(const RowMatrix& m, std::ostream& out) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

RowMatrix read_embedding(std::istream& in) {
    Eigen::Index n = 0, d = 0;
    if (!(in >> n >> d) || n < 0 || d < 0) throw DataError("embedding: invalid 'n d' header");
    RowMatrix m(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            if (!(in >> m(i, j))) throw DataError("embedding: truncated at row " + std::to_string(i));
    return m;
}

} // namespace scd
