//! Report keys for the statements a verdict rests on.

pub const FINITE_TYPE_FFRT: &str = "negative-delta-ffrt";
pub const NONNEGATIVE_DELTA_NOT_FFRT: &str = "nonnegative-delta-coprime-not-ffrt";
pub const FROBENIUS_SANDWICH_FFRT: &str = "all-weights-equal-p-ffrt";
pub const POSITIVE_GENUS_NOT_FFRT: &str = "positive-genus-not-ffrt";
pub const POSITIVE_ROOT_CLASSIFICATION: &str = "indecomposables-are-positive-roots";
pub const STABLE_PUSHFORWARD: &str = "positive-delta-pushforward-indecomposable";
pub const ELLIPTIC_COVER_FSPLIT: &str = "delta-zero-f-split-iff-ordinary-cover";
pub const SUPERSINGULAR_PUSHFORWARD: &str = "delta-zero-supersingular-pushforward-is-gq";
pub const ORDINARY_PUSHFORWARD: &str = "delta-zero-ordinary-pushforward-census";
pub const FEDDER_CRITERION: &str = "fedder-criterion";
pub const SINGULARITY_CLASS: &str = "delta-sign-singularity-class";
pub const EXTERNAL_SANDWICH_EXAMPLES: &str = "external-sandwich-examples-not-rederived";

/// One-line description of a report key.
pub fn describe(key: &str) -> &'static str {
    match key {
        FINITE_TYPE_FFRT => {
            "delta < 0: indecomposable bundles have bounded rank, finitely many classes up to twist, so R has FFRT"
        }
        NONNEGATIVE_DELTA_NOT_FFRT => {
            "delta >= 0 and p divides no weight: the orbifold curve lacks GFFRT, so R does not have FFRT"
        }
        FROBENIUS_SANDWICH_FFRT => {
            "every weight equals p: the curve is a Frobenius sandwich and R has FFRT"
        }
        POSITIVE_GENUS_NOT_FFRT => "base curve of genus >= 1: R(C, D) does not have FFRT",
        POSITIVE_ROOT_CLASSIFICATION => {
            "an indecomposable sheaf of type t exists iff t is a positive root of the extended lattice"
        }
        STABLE_PUSHFORWARD => "delta > 0: the Frobenius push-forward of O is indecomposable",
        ELLIPTIC_COVER_FSPLIT => {
            "delta = 0: the curve is F-split iff its elliptic cover is ordinary, forcing p = 1 mod m"
        }
        SUPERSINGULAR_PUSHFORWARD => "delta = 0, supersingular cover: F^e_* O is the indecomposable G_q",
        ORDINARY_PUSHFORWARD => {
            "delta = 0, ordinary cover: F^e_*(omega^i) splits into r + 1 pairwise distinct indecomposables"
        }
        FEDDER_CRITERION => "f^(p-1) not in (x^p, y^p, z^p) iff the hypersurface is F-pure",
        SINGULARITY_CLASS => "log terminal iff delta < 0, log canonical iff delta <= 0",
        EXTERNAL_SANDWICH_EXAMPLES => {
            "p divides some but not all weights; cases such as (2,3,7) at p = 2, 3, 7 are settled only by external results"
        }
        _ => "unknown key",
    }
}
