use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::Polynomial;

/// Which property a verdict speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    FPure,
    StronglyFPure,
    StronglyFRegular,
    DivisoriallyFRegular,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::FPure => "F-pure",
            Property::StronglyFPure => "strongly F-pure",
            Property::StronglyFRegular => "strongly F-regular",
            Property::DivisoriallyFRegular => "divisorially F-regular",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "rule")]
pub enum RefutationReason {
    /// The criterion polynomial lies in `m^[q]` at the failing level.
    CriterionInBracket,
    /// The boundary has coefficient `>= 1`, so its round-down is nonzero and
    /// strong F-regularity is impossible.
    RoundDownNonzero,
    /// Strong (or divisorial) F-regularity would imply F-purity, which
    /// failed at the given level.
    NotFPure,
}

impl fmt::Display for RefutationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RefutationReason::CriterionInBracket => "criterion polynomial lies in m^[q]",
            RefutationReason::RoundDownNonzero => "round-down of the boundary is nonzero",
            RefutationReason::NotFPure => "the pair is not F-pure",
        })
    }
}

fn ser_poly<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum VerdictKind {
    /// Definitive: the property fails, witnessed at `level` (0 when no
    /// Frobenius level was needed).
    Refuted {
        level: u32,
        reason: RefutationReason,
    },
    /// The criterion passed at every level `1..=level`.
    HoldsUpToLevel { level: u32 },
    /// The witness `c` splits at `level`.
    CertifiedPositive {
        level: u32,
        #[serde(serialize_with = "ser_poly")]
        witness: Polynomial,
    },
    /// Nothing was decided within `levels` levels.
    Inconclusive { levels: u32 },
}

impl VerdictKind {
    pub fn is_refuted(&self) -> bool {
        matches!(self, VerdictKind::Refuted { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            VerdictKind::Refuted { .. } => "refuted",
            VerdictKind::HoldsUpToLevel { .. } => "holds-up-to-level",
            VerdictKind::CertifiedPositive { .. } => "certified-positive",
            VerdictKind::Inconclusive { .. } => "inconclusive",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::Refuted { level, reason } => write!(f, "Refuted({level}): {reason}"),
            VerdictKind::HoldsUpToLevel { level } => write!(f, "HoldsUpToLevel({level})"),
            VerdictKind::CertifiedPositive { level, witness } => {
                write!(f, "CertifiedPositive({level}, c = {witness})")
            }
            VerdictKind::Inconclusive { levels } => write!(f, "Inconclusive({levels} levels)"),
        }
    }
}

/// Generators of `m^[q] : h` at one level, or why they are missing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauRecord {
    pub generators: Vec<String>,
    pub skipped: Option<String>,
}

/// Outcome of one criterion evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRecord {
    pub e: u32,
    pub q: u64,
    pub r: u64,
    /// `true` iff the criterion polynomial is outside `m^[q]`.
    pub passed: bool,
    /// Number of terms of the criterion polynomial modulo `m^[q]`.
    pub surviving_terms: usize,
    /// Largest surviving term, when there is one.
    pub survivor: Option<String>,
    /// Which test produced the record (`fpure`, `witness`, ...).
    pub stage: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<TauRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub property: Property,
    pub verdict: VerdictKind,
    pub transcript: Vec<LevelRecord>,
    /// Set when a budget stopped the run early; the verdict then covers only
    /// the completed levels.
    pub budget_exceeded: Option<String>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn kind(&self) -> &VerdictKind {
        &self.verdict
    }

    pub fn record(&self, e: u32) -> Option<&LevelRecord> {
        self.transcript.iter().find(|r| r.e == e && r.stage == "fpure")
    }

    /// `Some(true/false)` if the F-purity-style criterion was evaluated at
    /// level `e`.
    pub fn passed_at(&self, e: u32) -> Option<bool> {
        self.record(e).map(|r| r.passed)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.property, self.verdict)?;
        if let Some(b) = &self.budget_exceeded {
            write!(f, " [budget exceeded: {b}]")?;
        }
        Ok(())
    }
}
