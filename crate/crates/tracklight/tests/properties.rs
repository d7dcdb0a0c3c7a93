//! Cross-module property tests: serialization round-trips, pivot
//! faithfulness and parser robustness on arbitrary bytes.

use proptest::prelude::*;

use tracklight::io::{
    parse_code_csv, parse_events_csv, parse_tracking_dat, parse_tracking_long_csv,
    parse_tracking_wide_csv, write_tracking_wide_csv,
};
use tracklight::{Direction, TrackingData};

fn arbitrary_tracking_data() -> impl Strategy<Value = TrackingData> {
    (
        1usize..4,
        0usize..25,
        prop::sample::select(vec![10.0f64, 20.0, 25.0, 50.0, 12.5]),
    )
        .prop_flat_map(|(players, frames, framerate)| {
            let sample = prop_oneof![
                4 => (-1.0e4f64..1.0e4, -1.0e4f64..1.0e4).prop_map(Some),
                1 => Just(None),
            ];
            prop::collection::vec(sample, frames * players).prop_map(move |samples| {
                let mut coords = Vec::with_capacity(samples.len() * 2);
                for s in &samples {
                    match s {
                        Some((x, y)) => {
                            coords.push(*x);
                            coords.push(*y);
                        }
                        None => {
                            coords.push(f64::NAN);
                            coords.push(f64::NAN);
                        }
                    }
                }
                let ids = (0..players).map(|k| format!("p{k}")).collect();
                TrackingData::new(coords, frames, ids, framerate, Direction::Unspecified).unwrap()
            })
        })
}

proptest! {
    /// Writing and re-parsing recovers coordinates bit-exactly (missing
    /// samples included) along with player ids and frame count.
    #[test]
    fn wide_csv_round_trip_is_bit_exact(td in arbitrary_tracking_data()) {
        let written = write_tracking_wide_csv(&td);
        let (parsed, report) = parse_tracking_wide_csv(written.as_bytes()).unwrap();
        prop_assert_eq!(report.rows_skipped, 0);
        prop_assert_eq!(parsed.n_frames(), td.n_frames());
        prop_assert_eq!(parsed.player_ids(), td.player_ids());
        let (a, b) = (td.coords(), parsed.coords());
        prop_assert_eq!(a.len(), b.len());
        for i in 0..a.len() {
            prop_assert_eq!(a[i].to_bits(), b[i].to_bits());
        }
    }

    /// A second write/parse cycle reproduces the framerate of the first
    /// parse to within 1e-9 (integral-millisecond time bases re-derive).
    #[test]
    fn reparsed_framerate_is_stable(frames in 2usize..40, delta_ms in 1u64..200) {
        let mut src = String::from("frame,t_ms,p_x,p_y\n");
        for t in 0..frames {
            src.push_str(&format!("{t},{},1.0,2.0\n", t as u64 * delta_ms));
        }
        let (first, _) = parse_tracking_wide_csv(src.as_bytes()).unwrap();
        let (second, _) = parse_tracking_wide_csv(write_tracking_wide_csv(&first).as_bytes()).unwrap();
        prop_assert!((first.framerate() - second.framerate()).abs() < 1e-9);
    }

    /// Pivoting long rows and flattening the non-missing cells back
    /// reproduces exactly the input rows.
    #[test]
    fn long_pivot_is_faithful(
        n_times in 1usize..6,
        seed_rows in prop::collection::vec(
            (0usize..2, 0usize..6, 0usize..4, -100.0f64..100.0, -100.0f64..100.0),
            1..40,
        )
    ) {
        // normalize: one sample per (group, time, player), times contiguous
        // multiples of 40 ms so frame indexes map back to timestamps
        let mut samples = std::collections::BTreeMap::new();
        for (group, time, player, x, y) in seed_rows {
            samples.insert((group, time % n_times, player), (x, y));
        }
        // every chosen time must occur in each group's union time base
        let groups: Vec<usize> = samples.keys().map(|(g, _, _)| *g).collect();
        for group in groups {
            for time in 0..n_times {
                samples.entry((group, time, 99)).or_insert((0.0, 0.0));
            }
        }

        let mut src = String::from("t_ms,group_id,player_id,x,y\n");
        for ((group, time, player), (x, y)) in &samples {
            src.push_str(&format!("{},g{},q{},{},{}\n", time * 40, group, player, x, y));
        }
        let (parsed, report) = parse_tracking_long_csv(src.as_bytes()).unwrap();
        prop_assert_eq!(report.rows_skipped, 0);

        let mut flattened = std::collections::BTreeMap::new();
        for (group_id, td) in &parsed {
            let group: usize = group_id[1..].parse().unwrap();
            for t in 0..td.n_frames() {
                for (k, pid) in td.player_ids().iter().enumerate() {
                    let p = td.point(t, k);
                    if !p.is_missing() {
                        let player: usize = pid[1..].parse().unwrap();
                        flattened.insert((group, t, player), (p.x, p.y));
                    }
                }
            }
        }
        prop_assert_eq!(flattened, samples);
    }

    /// No parser may panic on arbitrary bytes: every input yields either a
    /// value or a structured format error.
    #[test]
    fn parsers_never_panic_on_raw_bytes(bytes in prop::collection::vec(any::<u8>(), 0..400)) {
        let _ = parse_tracking_wide_csv(&bytes[..]);
        let _ = parse_tracking_long_csv(&bytes[..]);
        let _ = parse_tracking_dat(&bytes[..]);
        let _ = parse_events_csv(&bytes[..]);
        let _ = parse_code_csv(&bytes[..]);
    }

    /// Same, biased toward the grammar's alphabet to reach deeper paths.
    #[test]
    fn parsers_never_panic_on_grammar_like_text(
        text in "[0-9a-z,.;:|=_\\-\n\r ]{0,300}"
    ) {
        let _ = parse_tracking_wide_csv(text.as_bytes());
        let _ = parse_tracking_long_csv(text.as_bytes());
        let _ = parse_tracking_dat(text.as_bytes());
        let _ = parse_events_csv(text.as_bytes());
        let _ = parse_code_csv(text.as_bytes());
    }
}
