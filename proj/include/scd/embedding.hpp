#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace scd {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Backend { netmf, ppr };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& s);

/// One point of the embedding parameter space.
struct EmbeddingParams {
    Backend backend = Backend::netmf;
    int window = 5;          ///< context window T
    int negative = 1;        ///< negative samples b
    int dimension = 32;      ///< latent dimension d (ignored by ppr: d = |N|)
    std::uint64_t seed = 0;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;
    std::string describe() const;

    friend bool operator==(const EmbeddingParams&, const EmbeddingParams&) = default;
};

/// |N| x d node embedding, row i belongs to node i.
struct Embedding {
    RowMatrix matrix;
    EmbeddingParams params;
    /// Dimension actually used; netmf clamps d to the node count.
    int effective_dimension = 0;
    /// Rows of degree-0 nodes (all zero for netmf, e_u for ppr).
    std::size_t isolated_rows = 0;

    std::size_t rows() const { return static_cast<std::size_t>(matrix.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(matrix.cols()); }
    bool all_finite() const { return matrix.allFinite(); }
};

/// Header "n d", then one row per line, shortest round-trip decimals.
void write_embedding(const RowMatrix& m, std::ostream& out);
RowMatrix read_embedding(std::istream& in);

} // namespace scd
