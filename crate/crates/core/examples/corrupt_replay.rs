//! Seeded random patterns print in the text grammar, and parsing that text
//! back replays the identical corruption.

use blockedit::channel::{apply_pattern, random_pattern, ErrorPattern};
use blockedit::code::encode;
use blockedit::decode::decode;
use blockedit::verify::random_message;
use blockedit::CodeParams;

fn main() -> blockedit::Result<()> {
    let p = CodeParams::deletion(3, 16, 96)?;
    let x = encode(&p, &random_message(&p, 1))?;
    for seed in 0..5 {
        let pattern = random_pattern(&p, seed);
        let text = pattern.to_string();
        let y = apply_pattern(&p, &x, &pattern)?;
        let replayed = apply_pattern(&p, &x, &ErrorPattern::parse(&p, &text)?)?;
        assert_eq!(y, replayed);
        assert_eq!(decode(&p, &y)?, pattern.true_count_vector());
        println!("seed {seed}: {text}");
        println!("         {}", decode(&p, &y)?);
    }
    Ok(())
}
