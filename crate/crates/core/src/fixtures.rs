//! Worked-example profiles, transcribed from classic elections and textbook
//! tables: the Pliny senate vote, the stylized 2000 US presidential race,
//! Condorcet cycles, runoff non-monotonicity pairs, and the committee
//! selection examples.

use crate::error::{Error, Result};
use crate::format::parse_profile;
use crate::profile::Profile;

/// All fixture names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 14] = [
    "PLINY",
    "GORE",
    "CONDORCET1",
    "CONDORCET2",
    "CONDORCET3",
    "RUNOFF_A",
    "RUNOFF_B",
    "ZWICKER",
    "SP_RESOLUTE",
    "DYNAMIC",
    "YOUNG",
    "HIKERS",
    "FALISZ",
    "BARBERA",
];

/// Look up a fixture profile by name.
pub fn fixture(name: &str) -> Result<Profile> {
    let doc = match name {
        // Roman Senate: acquit / banish / execute.
        "PLINY" => "alternatives: a,b,c\n102: a>b>c\n101: b>a>c\n100: c>b>a\n",
        // Stylized 2000 US presidential election, thousands of voters per row.
        "GORE" => concat!(
            "alternatives: Buchanan,Bush,Gore,Nader\n",
            "2: Nader>Gore>Bush>Buchanan\n",
            "49: Gore>Bush>Nader>Buchanan\n",
            "48: Bush>Buchanan>Gore>Nader\n",
            "1: Buchanan>Bush>Gore>Nader\n",
        ),
        // Three instantiations of the Condorcet paradox.
        "CONDORCET1" => "alternatives: a,b,c\n1: a>b>c\n1: b>c>a\n1: c>a>b\n",
        "CONDORCET2" => "alternatives: a,b,c\n102: a>b>c\n101: b>c>a\n100: c>a>b\n",
        "CONDORCET3" => "alternatives: a,b,c,d\n1: a>b>c>d\n1: b>c>a>d\n1: c>a>b>d\n",
        // Runoff non-monotonicity pair.
        "RUNOFF_A" => "alternatives: a,b,c\n8: a>b>c\n10: c>a>b\n7: b>c>a\n",
        "RUNOFF_B" => "alternatives: a,b,c\n6: a>b>c\n2: c>a>b\n10: c>a>b\n7: b>c>a\n",
        // Borda manipulation example on five alternatives.
        "ZWICKER" => concat!(
            "alternatives: a,b,c,d,e\n",
            "2: a>b>c>d>e\n",
            "3: d>e>b>c>a\n",
            "2: e>c>a>d>b\n",
        ),
        // Plurality with alphabetic tie-breaking; voter 3 can manipulate.
        "SP_RESOLUTE" => "alternatives: a,b,c\n1: a>b>c\n1: b>a>c\n1: c>b>a\n",
        // True preferences for the best-response dynamics example.
        "DYNAMIC" => "alternatives: a,b,c\n1: a>c>b\n1: b>c>a\n1: c>b>a\n",
        // 60-voter profile with no Condorcet winner.
        "YOUNG" => concat!(
            "alternatives: a,b,c\n",
            "23: a>b>c\n",
            "17: b>c>a\n",
            "2: b>a>c\n",
            "10: c>a>b\n",
            "8: c>b>a\n",
        ),
        // Three friends choosing a hike: long / medium / short.
        "HIKERS" => "alternatives: l,m,s\n1: l>m>s\n1: s>m>l\n1: m>s>l\n",
        // Committee selection example on six voters, five alternatives.
        "FALISZ" => concat!(
            "alternatives: a,b,c,d,e\n",
            "1: a>b>c>d>e\n",
            "1: e>a>b>d>c\n",
            "1: d>a>b>c>e\n",
            "1: c>b>d>e>a\n",
            "1: c>b>e>a>d\n",
            "1: b>c>d>e>a\n",
        ),
        // Condorcet committee example: committees of sizes 1..3 do not nest.
        "BARBERA" => concat!(
            "alternatives: a,b,c,d,e\n",
            "1: a>b>c>d>e\n",
            "1: a>b>e>c>d\n",
            "1: a>b>d>e>c\n",
            "1: c>d>e>a>b\n",
            "1: e>c>d>a>b\n",
            "1: d>e>c>a>b\n",
        ),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    parse_profile(doc)
}
