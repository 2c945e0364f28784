//! Shortest-path routing over bounded random point fields.
//!
//! The crate covers the classic exact algorithms ([`exact`]), three swarm
//! optimizers ([`swarm`]), and a pipeline that seeds Ant System path search
//! with Floyd-Warshall distances over a sparsified graph ([`hybrid`]). Every
//! run reports wall time, an analytic storage footprint and exact operation
//! counters ([`metrics`]).
//!
//! ```
//! use quasiroute::{generate_points, run_hybrid, Boundary, HybridParams, Variant};
//!
//! let field = generate_points(10, Boundary::default(), 42).unwrap();
//! let result = run_hybrid(&field, 0, 9, &HybridParams::new(Variant::ModifiedFwAco)).unwrap();
//! assert_eq!(result.route.path.first(), Some(&0));
//! assert_eq!(result.route.path.last(), Some(&9));
//! assert!(result.route.cost >= result.all_pairs.dist.get(0, 9));
//! ```

pub mod error;
pub mod exact;
pub mod geometry;
pub mod graph;
pub mod hybrid;
pub mod io;
pub mod metrics;
pub mod svg;
pub mod swarm;

pub use error::{Error, Result};
pub use exact::{
    bellman_ford, dijkstra, floyd_warshall, johnson, AllPairsResult, SingleSourceResult,
};
pub use geometry::{generate_points, Boundary, Point, PointField};
pub use graph::{
    build_complete_graph, build_knn_graph, reconstruct_path, DistanceMatrix, Edge, Graph,
    NextHopMatrix,
};
pub use hybrid::{modified_floyd_warshall, run_hybrid, HybridParams, HybridResult, Variant};
pub use metrics::{compare, ComparisonTable, ComplexityReport};
pub use swarm::{
    aco_shortest_path, evaporate_and_deposit, gwo_minimize, pso_minimize, transition_probabilities,
    AcoParams, PathResult, PheromoneMatrix, SwarmMinParams, Visibility,
};
