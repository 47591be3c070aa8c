//! Exact maximum weight independent set (MWIS) for (P7, triangle)-free graphs.
//!
//! The crate is organized around the solver and the pieces needed to trust
//! it:
//!
//! - [`graph`]: immutable graphs, bitset vertex sets, weights, bipartition.
//! - [`recognition`]: triangle, induced path and induced C5 detection, and
//!   the (P7, triangle)-free class check.
//! - [`bipartite`]: MWIS on bipartite induced subgraphs via minimum cut.
//! - [`solver`]: the polynomial decomposition by anti-neighborhood splits.
//! - [`oracle`]: exponential ground truth (branching, maximal-set listing).
//! - [`instances`]: seeded generators of in-class test graphs.
//! - [`io`]: the text graph format and the JSON result report.
//! - [`selftest`]: the oracle-equivalence harness behind `p7mwis selftest`.
//!
//! ```
//! use p7mwis::graph::{Graph, WeightMap};
//!
//! let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
//! let r = p7mwis::solver::solve(&c5, &WeightMap::unit(5), false).unwrap();
//! assert_eq!(r.weight, 2);
//! ```

pub mod bipartite;
pub mod graph;
pub mod instances;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod selftest;
pub mod solver;

pub use graph::{Graph, VertexSet, WeightMap};
pub use solver::{solve, SolveError, SolveResult};
