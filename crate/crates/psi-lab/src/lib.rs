//! Exact-arithmetic laboratory for the sum of element orders of finite groups.
//!
//! The central quantity is `psi(G)`, the sum of the orders of all elements of a
//! finite group `G`, together with its normalizations
//! `psi'(G) = psi(G) / psi(C_|G|)` and `psi''(G) = psi(G) / |G|^2`.
//! Everything is computed exactly: groups are dense multiplication tables,
//! ratios are arbitrary-precision rationals, and every threshold comparison is
//! a cross-multiplication, never floating point.
//!
//! Modules:
//! - [`grpcore`]: multiplication-table groups built by closure, plus all
//!   structural subroutines (subgroups, normality, centralizers, cores,
//!   quotients, conjugacy classes, normal-subgroup enumeration).
//! - [`families`]: named groups and parametric families, the group-spec
//!   mini-language, and the builtin corpus.
//! - [`psi`]: exact psi, psi', psi'' and every closed form.
//! - [`props`]: cyclic / abelian / nilpotent / supersolvable / solvable
//!   classifiers.
//! - [`verify`]: per-group and per-corpus checks of the threshold theorems.
//! - [`search`]: the cyclic-group value landscape of psi''.
//! - [`corpus_io`]: the plain-text corpus file format.
//! - [`report`]: JSON report schema shared with the CLI.

pub mod corpus_io;
pub mod families;
pub mod grpcore;
pub mod props;
pub mod psi;
pub mod report;
pub mod search;
pub mod verify;

pub use families::{builtin_corpus, make, parse_spec, CorpusEntry, GroupSpec};
pub use grpcore::{ElementSet, Group, GroupError, Perm};
pub use props::{classify, StructureFlags};
pub use psi::{psi_cyclic, psi_cyclic_of, psi_sum, psi_triple, BigRational, Factorization, PsiTriple};
