//! Assembly of the full per-structure report: the selected sections in a
//! fixed order, with an aggregate verdict over the verdict-carrying ones.

use serde::Serialize;

use crate::calculus::{bkn_check, identity_suite, BknReport, IdentityReport};
use crate::harmonic::{
    betti_numbers, Analysis, BettiReport, DualityReport, HolomorphicReport, InequalityReport,
    InjectivityReport, LambdaReport, LefschetzReport, PluriclosedReport, PrimitiveReport,
};
use crate::model::HermitianStructure;

/// Which report sections to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Selection {
    pub tables: bool,
    pub identities: bool,
    pub dualities: bool,
    pub lefschetz: bool,
    pub primitives: bool,
    pub inequalities: bool,
    pub lambda: bool,
    pub pluriclosed: bool,
    pub holomorphic: bool,
    pub injectivity: bool,
}

impl Selection {
    pub fn all() -> Self {
        Selection {
            tables: true,
            identities: true,
            dualities: true,
            lefschetz: true,
            primitives: true,
            inequalities: true,
            lambda: true,
            pluriclosed: true,
            holomorphic: true,
            injectivity: true,
        }
    }

    pub fn none() -> Self {
        Selection {
            tables: false,
            identities: false,
            dualities: false,
            lefschetz: false,
            primitives: false,
            inequalities: false,
            lambda: false,
            pluriclosed: false,
            holomorphic: false,
            injectivity: false,
        }
    }

    /// Parse a comma-separated report list; `all` selects everything.
    pub fn parse(list: &str) -> Result<Self, String> {
        let mut sel = Selection::none();
        for raw in list.split(',') {
            let item = raw.trim();
            match item {
                "all" => sel = Selection::all(),
                "tables" => sel.tables = true,
                "identities" => sel.identities = true,
                "dualities" => sel.dualities = true,
                "lefschetz" => sel.lefschetz = true,
                "primitives" => sel.primitives = true,
                "inequalities" => sel.inequalities = true,
                "lambda" => sel.lambda = true,
                "pluriclosed" => sel.pluriclosed = true,
                "holomorphic" => sel.holomorphic = true,
                "injectivity" => sel.injectivity = true,
                "" => return Err("empty report name".into()),
                other => return Err(format!("unknown report `{other}`")),
            }
        }
        if sel == Selection::none() {
            return Err("no reports selected".into());
        }
        Ok(sel)
    }
}

#[derive(Serialize)]
pub struct IdentitySection {
    pub seed: u64,
    pub reports: Vec<IdentityReport>,
    pub bkn: BknReport,
    pub passed: bool,
}

/// All requested sections for one structure, in emission order.
#[derive(Serialize)]
pub struct FullReport {
    pub name: String,
    pub n: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub box_table: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge_table: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dualities: Option<DualityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lefschetz: Option<LefschetzReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primitives: Option<PrimitiveReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<InequalityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pluriclosed: Option<PluriclosedReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holomorphic: Option<HolomorphicReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injectivity: Option<InjectivityReport>,
    pub all_passed: bool,
}

/// Run the selected computations. `skip_betti` drops the Betti-dependent
/// bounds from the inequality section (for input that is not known to be a
/// nilmanifold, where invariant Betti numbers need not be topological).
pub fn assemble(
    h: &HermitianStructure,
    sel: &Selection,
    seed: u64,
    skip_betti: bool,
) -> FullReport {
    let analysis = Analysis::new(h);
    let mut passed = true;

    let (box_table, hodge_table, betti) = if sel.tables {
        (
            Some(analysis.box_table.printed()),
            Some(analysis.hodge_table().printed()),
            if skip_betti {
                None
            } else {
                Some(betti_numbers(&h.spec))
            },
        )
    } else {
        (None, None, None)
    };

    let identities = sel.identities.then(|| {
        let reports = identity_suite(h, seed);
        let bkn = bkn_check(h);
        let ok = reports.iter().all(|r| r.holds) && bkn.holds;
        passed &= ok;
        IdentitySection {
            seed,
            reports,
            bkn,
            passed: ok,
        }
    });

    let dualities = sel.dualities.then(|| {
        let r = analysis.duality_check();
        passed &= r.passed;
        r
    });

    let lefschetz = sel.lefschetz.then(|| {
        let r = analysis.lefschetz_check();
        passed &= r.passed;
        r
    });

    let primitives = sel.primitives.then(|| {
        let r = analysis.primitive_dims();
        passed &= r.passed;
        r
    });

    let inequalities = (sel.inequalities && !skip_betti).then(|| {
        let r = analysis.inequality_report();
        passed &= r.passed;
        r
    });

    let lambda = sel.lambda.then(|| {
        let r = analysis.lambda_report();
        passed &= r.passed;
        r
    });

    let pluriclosed = sel.pluriclosed.then(|| {
        let r = analysis.pluriclosed_check();
        passed &= r.passed;
        r
    });

    let holomorphic = sel.holomorphic.then(|| {
        let r = analysis.holomorphic_check();
        passed &= r.passed;
        r
    });

    let injectivity = sel.injectivity.then(|| {
        let r = analysis.injectivity_check();
        passed &= r.passed;
        r
    });

    FullReport {
        name: h.spec.name.clone(),
        n: h.n(),
        seed,
        box_table,
        hodge_table,
        betti,
        identities,
        dualities,
        lefschetz,
        primitives,
        inequalities,
        lambda,
        pluriclosed,
        holomorphic,
        injectivity,
        all_passed: passed,
    }
}
