use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use super::{Suite, VeritasError};
use crate::curvecat::{count_points, CurveError, PlaneCurveModel};
use crate::exec::ExecMode;
use crate::ffun::FfunError;
use crate::galois::GaloisError;
use crate::numsg::SemigroupError;
use crate::ovoid::{ovoid_report, OvoidReport};
use crate::svengine::{order_report, OrderError, OrderReport, ReportOptions};
use crate::zetabounds::ZetaError;

macro_rules! computation_from {
    ($($t:ty),*) => {$(
        impl From<$t> for VeritasError {
            fn from(e: $t) -> VeritasError {
                VeritasError::Computation(e.to_string())
            }
        }
    )*};
}

computation_from!(CurveError, OrderError, ZetaError, SemigroupError, FfunError, GaloisError);

/// Shared, lazily computed data for one suite run.
pub(crate) struct Ctx {
    pub suite: Suite,
    pub mode: ExecMode,
    pub curve: PlaneCurveModel,
    counts: Mutex<BTreeMap<u32, u64>>,
    report: OnceLock<Result<OrderReport, VeritasError>>,
    ovoid: OnceLock<Result<OvoidReport, VeritasError>>,
}

impl Ctx {
    pub fn new(suite: Suite, mode: ExecMode) -> Result<Ctx, VeritasError> {
        let curve = match suite {
            Suite::Hermitian { l } => PlaneCurveModel::hermitian(l)?,
            Suite::Quotient { l, n } => PlaneCurveModel::hermitian_quotient(l, n)?,
            Suite::Suzuki { s } | Suite::Ovoid { s } => PlaneCurveModel::suzuki(s)?,
            Suite::AllDesk => return Err(VeritasError::UnknownSuite("all-desk has no single curve".into())),
        };
        Ok(Ctx {
            suite,
            mode,
            curve,
            counts: Mutex::new(BTreeMap::new()),
            report: OnceLock::new(),
            ovoid: OnceLock::new(),
        })
    }

    pub fn is_hermitian(&self) -> bool {
        matches!(self.suite, Suite::Hermitian { .. })
    }

    pub fn is_quotient(&self) -> bool {
        matches!(self.suite, Suite::Quotient { .. })
    }

    pub fn is_suzuki(&self) -> bool {
        matches!(self.suite, Suite::Suzuki { .. })
    }

    pub fn is_ovoid(&self) -> bool {
        matches!(self.suite, Suite::Ovoid { .. })
    }

    /// `l` for the Hermitian family.
    pub fn l(&self) -> u64 {
        match self.suite {
            Suite::Hermitian { l } | Suite::Quotient { l, .. } => l,
            _ => 0,
        }
    }

    /// `(l + 1) / n` for quotients, `l + 1` for the Hermitian curve.
    pub fn quotient_degree(&self) -> u64 {
        match self.suite {
            Suite::Quotient { l, n } => (l + 1) / n,
            _ => self.l() + 1,
        }
    }

    pub fn s(&self) -> u32 {
        match self.suite {
            Suite::Suzuki { s } | Suite::Ovoid { s } => s,
            _ => 0,
        }
    }

    /// `(q0, q)` for the Suzuki family.
    pub fn q0_q(&self) -> (u64, u64) {
        let q0 = 1u64 << self.s();
        (q0, 2 * q0 * q0)
    }

    pub fn q(&self) -> u64 {
        self.curve.q()
    }

    pub fn genus(&self) -> u64 {
        self.curve.genus().unwrap_or(0)
    }

    /// `N_m`, cached.
    pub fn count(&self, m: u32) -> Result<u64, VeritasError> {
        if let Some(&n) = self.counts.lock().unwrap().get(&m) {
            return Ok(n);
        }
        let n = count_points(&self.curve, m, self.mode)?;
        self.counts.lock().unwrap().insert(m, n);
        Ok(n)
    }

    /// Order data of the distinguished system, with a census to depth 2
    /// (Hermitian family) or 1 (Suzuki).
    pub fn report(&self) -> Result<&OrderReport, VeritasError> {
        self.report
            .get_or_init(|| {
                let census_k = if self.is_suzuki() { 1 } else { 2 };
                Ok(order_report(&self.curve, &ReportOptions { d: None, census_k, mode: self.mode })?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn ovoid(&self) -> Result<&OvoidReport, VeritasError> {
        self.ovoid
            .get_or_init(|| Ok(ovoid_report(self.s(), self.s() == 1, self.mode)?))
            .as_ref()
            .map_err(Clone::clone)
    }
}
