//! Letter graphs and their retrieval problems.
//!
//! A letter graph `G(D, w)` has one vertex per position of a word `w` and an
//! edge between positions `i < j` iff the ordered pair `w_i w_j` belongs to
//! the decoder `D`. Given a graph together with two of the three objects
//! (word, decoder, coloring), this crate computes the third:
//!
//! - [`word_retrieval`]: topological ordering of an auxiliary order digraph.
//! - [`decoder`]: greedy verification plus a reduction to 2-SAT.
//! - [`coloring_retrieval`]: exact graph isomorphism.
//!
//! [`symmetric`] computes neighborhood diversity together with a witness
//! realizing the graph with a symmetric decoder of that many letters, and
//! [`oracle`] holds exponential reference implementations for testing.

pub mod coloring;
pub mod coloring_retrieval;
pub mod decoder;
pub mod error;
pub mod graph;
pub mod letter_graph;
pub mod letters;
pub mod oracle;
pub mod random;
pub mod symmetric;
pub mod twosat;
pub mod word_retrieval;

pub use coloring::Coloring;
pub use coloring_retrieval::{find_isomorphism, gi_to_coloring_instance, retrieve_coloring};
pub use decoder::{retrieve_decoder, verify_decoder, DecoderInstance};
pub use error::{Error, Result};
pub use graph::{
    are_generalized_twins, bipartite_edges, induced_subgraph, Graph, IsomorphismMapping, Vertex,
};
pub use letter_graph::{count_runs, decode, is_palindrome, project_word, ColoredGraph};
pub use letters::{Alphabet, Decoder, DirectedPair, Letter, Word};
pub use symmetric::{neighborhood_diversity, symmetric_witness, twin_partition};
pub use twosat::{solve_2sat, Cnf2Formula};
pub use word_retrieval::{build_order_digraph, retrieve_word, topological_order};
