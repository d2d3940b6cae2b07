//! Rule-set configuration: which dependent-product and extensionality rules
//! are primitive for a given run of the kernel.

use crate::term::Con;
use std::fmt;
use thiserror::Error;

/// Which formulation of dependent products is primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PiMode {
    /// Application and β only.
    AppBeta,
    /// The eliminator and its computation rule only.
    Funsplit,
    /// Both formulations at once.
    Both,
}

impl PiMode {
    pub fn has_app(self) -> bool {
        matches!(self, PiMode::AppBeta | PiMode::Both)
    }

    pub fn has_funsplit(self) -> bool {
        matches!(self, PiMode::Funsplit | PiMode::Both)
    }
}

/// Selects which rule groups are axiomatic. Identity types, sums, unit, empty,
/// dependent sums and the code universe are always present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleSet {
    pub pi_mode: PiMode,
    pub prop_eta_primitive: bool,
    pub ext_primitive: bool,
    pub pi_id_elim_primitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleSetError {
    #[error("rule set invariant violated: {0}")]
    Invalid(&'static str),
    #[error("cannot parse rule spec `{0}` (expected atoms app, funsplit, eta, ext, pid joined by `+` or `,`)")]
    Parse(String),
}

impl RuleSet {
    pub const fn new(pi_mode: PiMode) -> RuleSet {
        RuleSet {
            pi_mode,
            prop_eta_primitive: false,
            ext_primitive: false,
            pi_id_elim_primitive: false,
        }
    }

    pub const APP: RuleSet = RuleSet::new(PiMode::AppBeta);
    pub const FUNSPLIT: RuleSet = RuleSet::new(PiMode::Funsplit);
    pub const BOTH: RuleSet = RuleSet::new(PiMode::Both);

    pub fn with_eta(mut self) -> RuleSet {
        self.prop_eta_primitive = true;
        self
    }

    pub fn with_ext(mut self) -> RuleSet {
        self.ext_primitive = true;
        self
    }

    pub fn with_pi_id_elim(mut self) -> RuleSet {
        self.pi_id_elim_primitive = true;
        self
    }

    /// Checks the invariants: η, ext and L all state their conclusions with
    /// `app`, so each requires the app-formulation to be present.
    pub fn validate(&self) -> Result<(), RuleSetError> {
        if self.ext_primitive && !self.pi_mode.has_app() {
            return Err(RuleSetError::Invalid("ext requires the app-formulation"));
        }
        if self.pi_id_elim_primitive && !self.pi_mode.has_app() {
            return Err(RuleSetError::Invalid("L requires the app-formulation"));
        }
        if self.prop_eta_primitive && !self.pi_mode.has_app() {
            return Err(RuleSetError::Invalid(
                "primitive propositional η requires the app-formulation",
            ));
        }
        Ok(())
    }

    /// Is the constant licensed under this rule set?
    pub fn licenses(&self, con: Con) -> bool {
        match con {
            Con::App => self.pi_mode.has_app(),
            Con::Funsplit => self.pi_mode.has_funsplit(),
            Con::Ext => self.ext_primitive,
            Con::PiIdElim => self.pi_id_elim_primitive,
            Con::Eta => self.prop_eta_primitive,
            _ => true,
        }
    }

    /// Inclusion of enabled rules: everything `self` licenses, `other` does too.
    pub fn included_in(&self, other: &RuleSet) -> bool {
        (!self.pi_mode.has_app() || other.pi_mode.has_app())
            && (!self.pi_mode.has_funsplit() || other.pi_mode.has_funsplit())
            && (!self.prop_eta_primitive || other.prop_eta_primitive)
            && (!self.ext_primitive || other.ext_primitive)
            && (!self.pi_id_elim_primitive || other.pi_id_elim_primitive)
    }

    /// Every valid rule set, for lattice-wide tests.
    pub fn all_valid() -> Vec<RuleSet> {
        let mut out = Vec::new();
        for pi_mode in [PiMode::AppBeta, PiMode::Funsplit, PiMode::Both] {
            for eta in [false, true] {
                for ext in [false, true] {
                    for pid in [false, true] {
                        let rs = RuleSet {
                            pi_mode,
                            prop_eta_primitive: eta,
                            ext_primitive: ext,
                            pi_id_elim_primitive: pid,
                        };
                        if rs.validate().is_ok() {
                            out.push(rs);
                        }
                    }
                }
            }
        }
        out
    }

    /// Parse a rule spec like `app`, `funsplit`, `app+eta` or `app,funsplit+pid`.
    pub fn parse(spec: &str) -> Result<RuleSet, RuleSetError> {
        let mut app = false;
        let mut funsplit = false;
        let mut rs = RuleSet::new(PiMode::AppBeta);
        for atom in spec.split([',', '+']) {
            match atom.trim() {
                "app" => app = true,
                "funsplit" => funsplit = true,
                "eta" => rs.prop_eta_primitive = true,
                "ext" => rs.ext_primitive = true,
                "pid" => rs.pi_id_elim_primitive = true,
                _ => return Err(RuleSetError::Parse(spec.to_string())),
            }
        }
        rs.pi_mode = match (app, funsplit) {
            (true, true) => PiMode::Both,
            (false, true) => PiMode::Funsplit,
            (true, false) => PiMode::AppBeta,
            (false, false) => return Err(RuleSetError::Parse(spec.to_string())),
        };
        rs.validate()?;
        Ok(rs)
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut atoms = Vec::new();
        if self.pi_mode.has_app() {
            atoms.push("app");
        }
        if self.pi_mode.has_funsplit() {
            atoms.push("funsplit");
        }
        if self.prop_eta_primitive {
            atoms.push("eta");
        }
        if self.ext_primitive {
            atoms.push("ext");
        }
        if self.pi_id_elim_primitive {
            atoms.push("pid");
        }
        write!(f, "{}", atoms.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        for rs in RuleSet::all_valid() {
            assert_eq!(RuleSet::parse(&rs.to_string()).unwrap(), rs);
        }
    }

    #[test]
    fn parse_comma_and_plus() {
        assert_eq!(
            RuleSet::parse("app,funsplit").unwrap(),
            RuleSet::BOTH
        );
        assert_eq!(RuleSet::parse("app+ext").unwrap(), RuleSet::APP.with_ext());
        assert!(RuleSet::parse("funsplit+ext").is_err());
        assert!(RuleSet::parse("eta").is_err());
        assert!(RuleSet::parse("bogus").is_err());
    }

    #[test]
    fn lattice_has_seventeen_points() {
        assert_eq!(RuleSet::all_valid().len(), 17);
    }

    #[test]
    fn inclusion_is_a_partial_order() {
        let all = RuleSet::all_valid();
        for a in &all {
            assert!(a.included_in(a));
            for b in &all {
                if a.included_in(b) && b.included_in(a) {
                    assert_eq!(a, b);
                }
            }
        }
    }
}
