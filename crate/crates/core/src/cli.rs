/// Placeholder during bring-up.
pub fn run(_args: &[String]) -> i32 {
    2
}
