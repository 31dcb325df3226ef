use mubar::diagram::{apply_move, MoveSpec};
use mubar::fixtures;
use mubar::milnor;

#[test]
#[ignore]
fn inspect_bad_r3() {
    let moves = [
        MoveSpec::R2Insert { over: 4, under: 1, sign: 1 },
        MoveSpec::R2Insert { over: 5, under: 6, sign: 1 },
        MoveSpec::R2Insert { over: 10, under: 3, sign: -1 },
        MoveSpec::R2Insert { over: 21, under: 7, sign: -1 },
        MoveSpec::R1Insert { arc: 7, sign: -1, over_first: true },
    ];
    let mut cur = fixtures::borromean();
    for m in &moves {
        cur = apply_move(&cur, m).unwrap();
    }
    let base = milnor::milnor_table(&fixtures::borromean(), 4).unwrap();
    for (cid, c) in cur.crossings().iter().enumerate() {
        println!(
            "crossing {cid}: over {}->{} under {}->{} sign {} comps ({},{})",
            c.over_in, c.over_out, c.under_in, c.under_out, c.sign,
            cur.arcs()[c.over_in].component, cur.arcs()[c.under_in].component
        );
    }
    let slid = apply_move(&cur, &MoveSpec::R3 { over_first: 5, over_second: 10, lower: 1 }).unwrap();
    let t = milnor::milnor_table(&slid, 4).unwrap();
    for (seq, e) in &base.entries {
        let o = &t.entries[seq];
        if e.mu_bar != o.mu_bar || e.delta != o.delta {
            println!("{seq:?}: base mu={} delta={} -> slid mu={} delta={}", e.mu, e.delta, o.mu, o.delta);
        }
    }
}
