use cohdiff_core::ccdc::corrupt::{CorruptedSampler, CorruptedSigma};
use cohdiff_core::ccdc::laws::{check_axioms, LawConfig};
use cohdiff_core::pcs::{Pcs, PcsSampler};
use cohdiff_core::polycdc::{PolyCdc, PolySampler};

fn config(cases: usize) -> LawConfig {
    LawConfig { cases, ..LawConfig::default() }
}

#[test]
fn pcs_satisfies_all_laws() {
    let report = check_axioms(&Pcs::default(), &mut PcsSampler::new(1), &config(30));
    println!("{report}");
    assert!(report.passed(), "{report}");
}

#[test]
fn poly_satisfies_all_laws() {
    let report = check_axioms(&PolyCdc::default(), &mut PolySampler::new(1), &config(30));
    println!("{report}");
    assert!(report.passed(), "{report}");
}

#[test]
fn corrupted_sigma_is_caught() {
    let report = check_axioms(&CorruptedSigma(Pcs::default()), &mut CorruptedSampler(PcsSampler::new(1)), &config(30));
    assert!(!report.get("D-zero").unwrap().passed(), "{report}");
}
