#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace dmid {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Row ownership of the global data matrices across agents.
///
/// Agent i owns the input rows `input_rows[i]` of U and the output rows
/// `output_rows[i]` of Y. Row indices are 0-based internally; the text
/// config format is 1-based (see io.hpp). The per-agent sets are disjoint,
/// jointly exhaustive and non-empty, and stored sorted ascending.
struct Partition {
  int n_agents = 0;
  int m = 0;  ///< total input dimension (rows of U)
  int n = 0;  ///< total output dimension (rows of Y)
  std::vector<std::vector<int>> input_rows;
  std::vector<std::vector<int>> output_rows;

  /// Validates and normalizes (sorts) the index sets.
  /// Throws std::invalid_argument on overlap, gaps, empty sets or
  /// out-of-range indices.
  static Partition create(int m, int n, std::vector<std::vector<int>> input_rows,
                          std::vector<std::vector<int>> output_rows);

  /// Contiguous blocks of the given sizes, in agent order.
  static Partition contiguous(const std::vector<int>& input_sizes,
                              const std::vector<int>& output_sizes);
};

/// Stateless per-sample transform applied before the data matrices are formed.
struct FeatureMap {
  std::string name = "identity";
  std::function<Vec(const Vec&)> fn;

  static FeatureMap identity();
  /// Elementwise square; the simplest nonlinear feature lift.
  static FeatureMap square();
  /// Lookup by name ("identity", "square"). Throws on unknown names.
  static FeatureMap by_name(const std::string& name);

  Vec operator()(const Vec& v) const { return fn ? fn(v) : v; }
};

/// Input/output data matrices. Column k of U is phi_u(u(k)), column k of Y
/// is phi_y(y(k)); both have T columns.
struct IoDataset {
  Mat U;  ///< m x T
  Mat Y;  ///< n x T
  int T = 0;
  std::string phi_u_name = "identity";
  std::string phi_y_name = "identity";

  int m() const { return static_cast<int>(U.rows()); }
  int n() const { return static_cast<int>(Y.rows()); }
};

/// One agent's private slice of the dataset: the rows it owns, in set order.
struct AgentView {
  int agent_id = 0;
  Mat u_local;  ///< |D_u,i| x T
  Mat y_local;  ///< |D_y,i| x T
};

/// Per-agent lifted operators.
///
/// `u_lift` is the nT x n*|D_u,i| stacked block matrix whose k-th n-row block
/// is the horizontal concatenation of U(j,k)*I_n over the agent's input rows j
/// (in set order). `y_lift` is the length-nT vector with Y(j,k) scattered at
/// global output position j inside sample block k for the agent's output rows,
/// zero elsewhere.
///
/// The identity u_lift * vec(A_i) = vec(A_i * u_local) (columns stacked)
/// lets apply()/apply_transpose() evaluate the operator with two small
/// matrix products instead of touching the stored dense form; both routes
/// agree to roundoff and the dense matrix remains the reference contract.
struct LiftedBlocks {
  int agent_id = 0;
  int n = 0;       ///< global output dimension
  int T = 0;       ///< samples
  int d = 0;       ///< |D_u,i|
  Mat u_local;     ///< d x T (copy of the agent's input rows)
  Mat u_lift;      ///< nT x n*d, dense
  Vec y_lift;      ///< nT

  int x_dim() const { return n * d; }
  int z_dim() const { return n * T; }

  /// u_lift * x without forming the product against the dense matrix.
  Vec apply(const Vec& x) const;
  /// u_lift^T * v, same evaluation strategy.
  Vec apply_transpose(const Vec& v) const;
};

/// Builds the data matrices from raw samples.
/// Throws std::invalid_argument on inconsistent dimensions or non-finite
/// values (also after the feature maps are applied).
IoDataset build_dataset(const std::vector<std::pair<Vec, Vec>>& samples,
                        const FeatureMap& phi_u = FeatureMap::identity(),
                        const FeatureMap& phi_y = FeatureMap::identity());

/// Splits the dataset into per-agent views per the partition.
std::vector<AgentView> split_views(const IoDataset& dataset, const Partition& partition);

/// Builds the lifted operators for one agent's view.
LiftedBlocks lift_agent_blocks(const AgentView& view, const Partition& partition);

/// Convenience: lift all agents.
std::vector<LiftedBlocks> lift_all(const std::vector<AgentView>& views,
                                   const Partition& partition);

}  // namespace dmid
