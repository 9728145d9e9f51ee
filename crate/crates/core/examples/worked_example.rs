//! The D_1(5,20) example: encode, corrupt with one deletion in blocks 1, 3
//! and 4, then recover the per-block deletion counts.

use blockedit::channel::{apply_pattern, ErrorPattern};
use blockedit::code::{encode, extract_message, redundancy};
use blockedit::decode::decode_traced;
use blockedit::{BitString, CodeParams};

fn main() -> blockedit::Result<()> {
    let p = CodeParams::deletion(1, 5, 20)?;
    let x: BitString = "10101 00111 00011 00100".parse()?;
    let msg = extract_message(&p, &x)?;
    assert_eq!(encode(&p, &msg)?, x);
    println!("{p}: redundancy {} bits, message {msg}", redundancy(&p));
    println!("x = {x}");

    let pattern = ErrorPattern::parse(&p, "1=del@3,3=del@5,4=del@1")?;
    let y = apply_pattern(&p, &x, &pattern)?;
    println!("pattern {pattern}");
    println!("y = {y}");

    let mut reads = Vec::new();
    let v = decode_traced(&p, &y, |block, pos| reads.push((block, pos)))?;
    println!("decoded {v}");
    for (block, pos) in reads {
        println!("  block {block} read y[{pos}] = {}", y.bit(pos));
    }
    Ok(())
}
