use proptest::prelude::*;

use blockedit::channel::{
    apply_pattern, canonical_vector, consistent_vectors, random_pattern, select_canonical,
    true_count_vector, vector_is_consistent,
};
use blockedit::code::{encode, extract_message, is_codeword, message_len, redundancy};
use blockedit::decode::decode;
use blockedit::verify::random_message;
use blockedit::{BitString, CodeParams, Family};

/// Valid parameters for every family, with up to `max_blocks` blocks.
fn params(max_blocks: usize, max_ell: usize) -> impl Strategy<Value = CodeParams> {
    (0usize..4, 2..=max_blocks, 0usize..=max_ell, 1usize..=3).prop_filter_map(
        "valid parameters",
        |(f, m, extra, delta)| {
            let family = Family::ALL[f];
            let ell = match family {
                Family::DeletionDetect => 2 * delta + 1 + extra,
                Family::InsertDetect1 => 3 + extra,
                Family::InsertDetect2 => 9 + extra,
                Family::MixedDetect1 => 7 + extra,
            };
            CodeParams::new(family, delta, ell, ell * m).ok()
        },
    )
}

proptest! {
    #[test]
    fn encode_round_trip(p in params(8, 20), seed in any::<u64>()) {
        let msg = random_message(&p, seed);
        prop_assert_eq!(msg.len(), message_len(&p));
        prop_assert_eq!(message_len(&p) + redundancy(&p), p.n());
        let x = encode(&p, &msg).unwrap();
        prop_assert!(is_codeword(&p, &x));
        prop_assert_eq!(extract_message(&p, &x).unwrap(), msg);
    }

    #[test]
    fn received_length(p in params(8, 20), seed in any::<u64>()) {
        let x = encode(&p, &random_message(&p, seed)).unwrap();
        let pat = random_pattern(&p, seed);
        let y = apply_pattern(&p, &x, &pat).unwrap();
        let v = true_count_vector(&pat);
        prop_assert_eq!(y.len() + v.total_deletions(), p.n() + v.total_insertions());
    }

    #[test]
    fn decoder_agrees_with_channel(p in params(40, 40), seed in any::<u64>()) {
        let x = encode(&p, &random_message(&p, seed ^ 1)).unwrap();
        let pat = random_pattern(&p, seed);
        let y = apply_pattern(&p, &x, &pat).unwrap();
        let v = decode(&p, &y).unwrap();
        if p.family() == Family::DeletionDetect {
            prop_assert_eq!(v, true_count_vector(&pat));
        } else {
            prop_assert!(vector_is_consistent(&p, &x, &y, &v));
        }
    }

    #[test]
    fn oracle_is_sound(p in params(3, 3), seed in any::<u64>()) {
        let x = encode(&p, &random_message(&p, seed ^ 2)).unwrap();
        let pat = random_pattern(&p, seed);
        let y = apply_pattern(&p, &x, &pat).unwrap();
        let set = consistent_vectors(&p, &x, &y).unwrap();
        prop_assert!(set.contains(&true_count_vector(&pat)));
        let canon = canonical_vector(&p, &x, &y).unwrap();
        prop_assert_eq!(Some(canon.clone()), select_canonical(set.iter()));
        prop_assert_eq!(decode(&p, &y).unwrap(), canon);
    }

    #[test]
    fn deletion_codes_nest(delta in 2usize..=4, extra in 0usize..4, m in 2usize..6, seed in any::<u64>()) {
        let ell = 2 * delta + 1 + extra;
        let p = CodeParams::deletion(delta, ell, ell * m).unwrap();
        let q = CodeParams::deletion(delta - 1, ell, ell * m).unwrap();
        let x = encode(&p, &random_message(&p, seed)).unwrap();
        prop_assert!(is_codeword(&q, &x));
    }

    #[test]
    fn text_round_trip(bits in proptest::collection::vec(0u8..2, 0..64)) {
        let b = BitString::from_bits(bits);
        prop_assert_eq!(b.to_string().parse::<BitString>().unwrap(), b);
    }
}
