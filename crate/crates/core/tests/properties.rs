mod common;

use common::props::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(0x5eed_0001, 48))]

    #[test]
    fn saturation(gens in prop::collection::vec(matrix3(), 1..3)) {
        saturation_idempotent(gens)?;
    }

    #[test]
    fn rref(vs in vectors(4, 6), mix in prop::collection::vec(rational(), 3)) {
        rref_stable(vs, mix)?;
    }

    #[test]
    fn conjugation(z in gauss(), p in poly(), q in poly()) {
        conj_involution(z, p, q)?;
    }

    #[test]
    fn subalgebra_round_trip(lambda in unit_disc()) {
        subalgebra_round_trip_i(lambda)?;
    }

    #[test]
    fn json_round_trip(entries in structure_constants(5)) {
        file_round_trip(entries)?;
    }

    #[test]
    fn import_table(lambda in unit_disc()) {
        import_round_trip(lambda)?;
    }
}

#[test]
fn fixed_structures_round_trip() {
    subalgebra_round_trip_fixed().unwrap();
}
