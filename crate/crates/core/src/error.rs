use thiserror::Error;

use crate::curvecat::CurveError;
use crate::ffun::FfunError;
use crate::galois::GaloisError;
use crate::numsg::SemigroupError;
use crate::svengine::OrderError;
use crate::veritas::VeritasError;
use crate::zetabounds::ZetaError;

/// Any failure surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Function(#[from] FfunError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Orders(#[from] OrderError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Veritas(#[from] VeritasError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
