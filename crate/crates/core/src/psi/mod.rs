//! The map Ψ from genuine types of W̃ to nilpotent orbits: classical rows by
//! partitions, exceptional rows by embedded tables, and the checks of the
//! scalar identity and the tensor-containment properties.

mod classical;
mod exceptional;
mod generalized;
pub mod reference;

pub use classical::{psi_classical, springer_character, verify_theorem1, PsiRow, SpringerType, Witness};
pub use exceptional::{
    fake_degree_labels, fingerprint_class, psi_exceptional, ExceptionalPsiRow, simply_laced_consistency, verify_counterexample_e6, verify_counterexample_on,
    verify_exceptional, verify_exceptional_on, weighted_norm,
};
pub use generalized::{psi_cuspidal, verify_generalized, CuspidalPsiRow};

use std::fmt::Display;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grouprep::{
    character_table, decompose, pointwise_product, sign_twist, Character, CharacterTable, Classes,
};
use crate::num::{QuadValue, Rational};
use crate::rootsys::RootSystem;
use crate::spincover::{build_spin_cover, casimir_element, casimir_scalar, CasimirElement, SpinCover};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Outcome of a verification: named checks with expected and actual values.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    /// Observations that are not pass/fail.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report { subject: subject.into(), ..Report::default() }
    }

    pub fn record(&mut self, name: impl Into<String>, pass: bool, expected: impl Display, actual: impl Display) -> bool {
        self.checks.push(Check { name: name.into(), expected: expected.to_string(), actual: actual.to_string(), pass });
        pass
    }

    pub fn compare<T: PartialEq + Display>(&mut self, name: impl Into<String>, expected: &T, actual: &T) -> bool {
        self.record(name, expected == actual, expected, actual)
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        let prefix = other.subject;
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.name = format!("{prefix}: {}", c.name);
            c
        }));
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }
}

/// W̃ with its annotated character table, spin characters and Casimir
/// element for the parameters carried by the root system.
pub struct CoverData {
    pub cover: SpinCover,
    pub table: CharacterTable,
    pub omega: CasimirElement,
    pub spins: Vec<Character>,
    pub sign: Character,
}

impl CoverData {
    pub fn new(rs: &RootSystem, bound: u128) -> Result<CoverData> {
        let cover = build_spin_cover(rs, bound)?;
        let table_bound = usize::try_from(bound).unwrap_or(usize::MAX);
        let mut table = character_table(&cover, table_bound)?;
        let sign = cover.sign_character(&table.classes);
        table.annotate(Some(table.classes.class_of(cover.z())), Some(&sign));
        let omega = casimir_element(&cover, &table.classes)?;
        let spins = cover.spin_characters(&table.classes)?;
        Ok(CoverData { cover, table, omega, spins, sign })
    }

    /// Same group and table, Casimir element for another parameter function
    /// or form.
    pub fn reparametrize(mut self, rs: &RootSystem) -> Result<CoverData> {
        if rs.family != self.cover.rs.family || rs.rank != self.cover.rs.rank {
            return Err(Error::Usage("reparametrization must keep the root system".into()));
        }
        self.cover.rs = rs.clone();
        self.omega = casimir_element(&self.cover, &self.table.classes)?;
        Ok(self)
    }

    pub fn classes(&self) -> &Classes {
        &self.table.classes
    }

    pub fn genuine(&self) -> Vec<usize> {
        (0..self.table.len()).filter(|&i| self.table.irreducibles[i].genuine).collect()
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.table.irreducibles[i].degree
    }

    pub fn scalar(&self, i: usize) -> Result<QuadValue> {
        casimir_scalar(&self.table.classes, &self.omega, &self.table.irreducibles[i].values)
    }

    /// Index of `χ_i ⊗ sgn`.
    pub fn associate(&self, i: usize) -> Result<usize> {
        let tw = sign_twist(&self.table.irreducibles[i].values, &self.sign);
        self.table.find(&tw).ok_or_else(|| Error::Table(format!("associate of {i} not in table")))
    }

    /// Multiplicities of every irreducible in `χ ⊗ S` for each spin module.
    pub fn tensor_with_spins(&self, chi: &[crate::num::Cyclotomic]) -> Result<Vec<Vec<Rational>>> {
        self.spins.iter().map(|s| decompose(&self.table, &pointwise_product(chi, s))).collect()
    }

    /// Index of the irreducible equal to a spin character.
    pub fn spin_index(&self, k: usize) -> Result<usize> {
        self.table.find(&self.spins[k]).ok_or_else(|| Error::Table("spin module is reducible".into()))
    }
}
