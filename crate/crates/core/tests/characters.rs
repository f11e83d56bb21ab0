use cbasis_core::enumerate::{enumerate_level_k, enumerate_semi_infinite, shifted_character};
use cbasis_core::{Freudenthal, HighestWeight};

fn hw(s: &str) -> HighestWeight {
    s.parse().unwrap()
}

#[test]
fn semi_infinite_census_matches_freudenthal() {
    for (s, n) in [("1,0", 8), ("0,1", 8), ("1,1", 4), ("0,1,0", 4), ("0,1,1", 3), ("0,0,1,0", 3)] {
        let h = hw(s);
        let basis = enumerate_semi_infinite(&h, n).unwrap();
        let table = Freudenthal::new(&h).character_table(n).unwrap();
        assert_eq!(basis.character.first_mismatch(&table), None, "Λ={s}");
        assert_eq!(basis.elements.len() as u64, table.total());
    }
}

#[test]
fn shifted_census_grows_into_the_full_character() {
    // W_0 ⊂ W_-2 ⊂ … : every shifted census is dominated by the full table
    let h = hw("0,1,0");
    let table = Freudenthal::new(&h).character_table(3).unwrap();
    for m in 0..5 {
        let census = shifted_character(&enumerate_level_k(&h, m, 3), &h, m).unwrap();
        for (d, mu, c) in census.iter() {
            assert!(c <= table.get(d, mu), "m={m} d={d} mu={mu}");
        }
    }
}

#[test]
fn stabilization_is_reported_at_a_finite_sweep() {
    let h = hw("1,0,0");
    let b = enumerate_semi_infinite(&h, 4).unwrap();
    assert!(b.sweep_m >= 4);
    assert!(b.elements.iter().all(|s| s.m <= b.sweep_m));
}
