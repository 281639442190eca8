//! Verification records shared by all suites, and the projector suite.

use serde::Serialize;

use crate::algebra::GeneratorId::{E12, E21, E34, E43};
use crate::analysis::invariants::kplus_invariants;
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::module::ModuleRep;
use crate::mz::projector::extremal_projector;
use crate::mz::zops::{apply_z, ZId};

/// One checked identity on one vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub relation_id: String,
    pub module: String,
    pub vector_label: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl VerificationRecord {
    pub fn compare(
        relation_id: impl Into<String>,
        module: &ModuleRep,
        vector_label: impl Into<String>,
        lhs: &SparseVec,
        rhs: &SparseVec,
    ) -> Self {
        Self {
            relation_id: relation_id.into(),
            module: module.name.clone(),
            vector_label: vector_label.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub records: Vec<VerificationRecord>,
    /// Checks not attempted because a precondition failed (e.g. a projector
    /// denominator vanishes on a vector outside `V⁺`).
    pub skipped: usize,
    /// Free-form remarks, e.g. informational probes.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), ..Default::default() }
    }

    pub fn push(&mut self, r: VerificationRecord) {
        self.records.push(r);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> + '_ {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn checked(&self) -> usize {
        self.records.len()
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.records.extend(other.records);
        self.skipped += other.skipped;
        self.notes.extend(other.notes);
    }

    /// `Ok` if every record passed, else the first failure as an error.
    pub fn into_result(self) -> Result<Self> {
        let first = self.failures().next().map(|f| {
            format!(
                "{} failed: {} on {} in {}: {} != {}",
                self.suite, f.relation_id, f.vector_label, f.module, f.lhs, f.rhs
            )
        });
        match first {
            None => Ok(self),
            Some(msg) => Err(Error::Internal(msg)),
        }
    }
}

fn projector_or_skip(module: &ModuleRep, v: &SparseVec, skipped: &mut usize) -> Result<Option<SparseVec>> {
    match extremal_projector(module, v) {
        Ok(p) => Ok(Some(p)),
        Err(Error::WeightSingularity { .. }) => {
            *skipped += 1;
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// `p² = p`, `E12 p = E34 p = 0`, `p E21 = p E43 = 0` on every basis vector,
/// and `z v = p(E v)` on a basis of `V⁺`. Vectors at which the projector
/// series is singular are counted as skipped.
pub fn verify_projector(module: &ModuleRep) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("projector");
    let zero = SparseVec::new();
    for i in 0..module.dim() {
        let v = SparseVec::unit(i);
        let label = format!("{}", module.labels[i]);
        if let Some(pv) = projector_or_skip(module, &v, &mut rep.skipped)? {
            if let Some(ppv) = projector_or_skip(module, &pv, &mut rep.skipped)? {
                rep.push(VerificationRecord::compare("p^2=p", module, &label, &ppv, &pv));
            }
            for g in [E12, E34] {
                let lhs = module.act(g, &pv)?;
                rep.push(VerificationRecord::compare(format!("{g} p=0"), module, &label, &lhs, &zero));
            }
        }
        for g in [E21, E43] {
            let gv = module.act(g, &v)?;
            if let Some(lhs) = projector_or_skip(module, &gv, &mut rep.skipped)? {
                rep.push(VerificationRecord::compare(format!("p {g}=0"), module, &label, &lhs, &zero));
            }
        }
    }
    let vplus = kplus_invariants(module)?;
    for (j, v) in vplus.vectors.iter().enumerate() {
        let label = format!("V+{}#{j}", vplus.weights[j]);
        for z in ZId::ALL {
            let lhs = apply_z(module, z, v)?;
            let rhs = extremal_projector(module, &module.act(z.generator(), v)?)?;
            rep.push(VerificationRecord::compare(format!("{z}=pE"), module, &label, &lhs, &rhs));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::kac;

    #[test]
    fn projector_suite_on_small_modules() {
        for (m, n) in [(0, 0), (1, 0), (2, 1)] {
            let rep = verify_projector(&kac(m, n)).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures().next());
            assert!(rep.checked() > 0);
        }
    }
}
