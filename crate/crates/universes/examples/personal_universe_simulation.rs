//! Two subjects, five events, private percepts, one shared vocabulary: the
//! run where both always agree while never perceiving the same thing — and a
//! variant where one mistranslation exposes the difference.
//!
//! ```bash
//! cargo run -p universes --example personal_universe_simulation
//! ```

use universes::io::Scenario;

fn main() -> universes::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios/table1.json");
    let scenario = Scenario::from_json(&std::fs::read_to_string(path)?)?;
    let transcript = scenario.run()?;

    println!("common-language run:");
    println!("  event  S1 sees  S2 sees  S1 says  S2 says  agree");
    for e in &transcript.entries {
        println!(
            "  {:<6} {:<8} {:<8} {:<8} {:<8} {}",
            e.event,
            e.percepts[0],
            e.percepts[1],
            e.tokens[0],
            e.tokens[1],
            if e.agree { "yes" } else { "no" }
        );
    }
    println!("  all_agree: {}", transcript.all_agree);
    println!("  percepts_ever_differ: {}", transcript.percepts_ever_differ);
    println!("  verdict: {}\n", transcript.verdict());

    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/scenarios/diverging_language.json"
    );
    let scenario = Scenario::from_json(&std::fs::read_to_string(path)?)?;
    let transcript = scenario.run()?;
    println!("diverging-language run:");
    for e in transcript.entries.iter().filter(|e| !e.agree) {
        println!(
            "  on event '{}': S1 says {}, S2 says {}",
            e.event, e.tokens[0], e.tokens[1]
        );
    }
    println!("  verdict: {}", transcript.verdict());
    Ok(())
}
