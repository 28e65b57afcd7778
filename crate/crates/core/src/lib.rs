//! protid identifies organisms in metagenomic DNA samples by working in
//! protein space. Reads are translated in all six frames, broken into
//! amino-acid 4-mer words, and stored as sparse associative arrays whose
//! rows are sequence labels and whose columns are 4-mer ids. Samples are
//! matched against a reference database with sparse matrix products, and
//! the 4-mer vocabulary can be subsampled by degree-distribution
//! percentiles to shrink the search space before matching.
//!
//! The crate is organised around the pipeline stages:
//!
//! - [`seqio`]: FASTA/FASTQ parsing and writing (gzip transparent).
//! - [`translate`]: reverse complement and six-frame translation.
//! - [`kmer`]: dense integer encoding of amino-acid k-mers and sliding
//!   window extraction.
//! - [`aarray`]: the sparse associative array, column statistics and
//!   sparse matrix products.
//! - [`degree`]: degree distributions, percentile cutoffs and keep-sets.
//! - [`refdb`]: building, filtering and persisting reference databases.
//! - [`identify`]: scoring samples, per-read organism calls and
//!   organism-level aggregation.
//! - [`simgen`]: deterministic spiked-sample read simulation.
//! - [`metrics`]: evaluation against simulation ground truth.

pub mod aarray;
pub mod degree;
pub mod error;
pub mod identify;
pub mod kmer;
pub mod metrics;
pub mod refdb;
pub mod seqio;
pub mod simgen;
pub mod translate;

pub use aarray::{from_reads, AssocArray, MatchCell, MatchMatrix, Product, Weighting};
pub use degree::{BinPolicy, DegreeMode, DegreeTable, FilterSpec, SelectBy};
pub use error::{Error, Result};
pub use identify::{OrganismReport, ReadCall, Thresholds, UNCLASSIFIED};
pub use kmer::{KmerCoder, KmerId};
pub use metrics::{EvalResult, RunDelta, TruthTable};
pub use refdb::{InputKind, ReferenceDB};
pub use seqio::{ProteinRecord, Read};
pub use simgen::{SimSpec, TargetSpec};
pub use translate::{six_frame, GeneticCode, ProteinFragment, Strand};
