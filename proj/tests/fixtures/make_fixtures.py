#!/usr/bin/env python3
"""Regenerates the committed fixture corpus. Every file this script writes is
deterministic, so re-running it must be a no-op on a clean checkout.

The golden expectation table below is hand-derived from the grammar, not
produced by the library under test; it is the frozen oracle the conversion
output is compared against byte for byte.
"""

from pathlib import Path

HERE = Path(__file__).resolve().parent


def write(name: str, lines) -> None:
    path = HERE / name
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")
    print(f"wrote {path.name}: {sum(1 for _ in open(path, encoding='utf-8'))} lines")


# --- golden corpus: 20 records covering every auxiliary kind -----------------

GOLDEN_INPUT = [
    "#label:golden",
    "# 20-record corpus exercising every auxiliary kind, connectors, brackets,",
    "# metadata tokens, and non-canonical digit grouping. Input order is shuffled.",
    "539.12.02\tNuclear physics. Scattering",
    "2-1\tNatural theology",
    "004.738.5\tInternet",
    "94(44)\"19\"\tHistory of France in the 20th century",
    "21\tThéologie naturelle",
    "(44)\tFrance",
    "=111\tEnglish language",
    "622.341.1:669.1\tIron ore mining and ferrous metallurgy",
    "[622+669](485)\tMining and metallurgy in Sweden",
    "621.039::539.7\tNuclear technology ordered with nuclear physics",
    "(=411.16)\tJewish peoples",
    "(075.8)\tTextbooks for higher education",
    "\"19\"\tTwentieth century",
    "-057\tPersons by occupation",
    "669'71\tAluminium alloys",
    "5/6\tNatural and applied sciences",
    "~a\tCoordination sign records",
    "~h\tNon-UDC notation connector",
    "*A38\tLocal extension A38",
    "01\tBibliographie",
]

# (canonical notation, description, main_class, aux_type, aux_part),
# sorted by canonical notation, byte order. Derived by hand.
GOLDEN_EXPECTED = [
    ('"19"', "Twentieth century", "AUX", "CommonTime", '"19"'),
    ("(075.8)", "Textbooks for higher education", "AUX", "CommonForm", "(075.8)"),
    ("(44)", "France", "AUX", "CommonPlace", "(44)"),
    ("(=411.16)", "Jewish peoples", "AUX", "CommonEthnic", "(=411.16)"),
    ("*A38", "Local extension A38", "AUX", "CommonNonUdc", "*A38"),
    ("-057", "Persons by occupation", "AUX", "CommonPersonsMaterials", "-057"),
    ("004.738.5", "Internet", "0", "", ""),
    ("01", "Bibliographie", "0", "", ""),
    ("2-1", "Natural theology", "2", "SpecialHyphen", "-1"),
    ("21", "Théologie naturelle", "2", "", ""),
    ("5/6", "Natural and applied sciences", "5", "", ""),
    ("539.120.2", "Nuclear physics. Scattering", "5", "", ""),
    ("621.039::539.7", "Nuclear technology ordered with nuclear physics", "6", "", ""),
    ("622.341.1:669.1", "Iron ore mining and ferrous metallurgy", "6", "", ""),
    ("669'71", "Aluminium alloys", "6", "SpecialApostrophe", "'71"),
    ('94(44)"19"', "History of France in the 20th century", "9", "CommonPlace", '(44)"19"'),
    ("=111", "English language", "AUX", "CommonLanguage", "=111"),
    ("[622+669](485)", "Mining and metallurgy in Sweden", "6", "CommonPlace", "(485)"),
    ("~a", "Coordination sign records", "", "CommonCoordination", ""),
    ("~h", "Non-UDC notation connector", "", "CommonNonUdc", ""),
]


def golden_expected_lines():
    yield "#label:golden"
    yield "notation\tdescription\tmain_class\taux_type\taux_part"
    for row in GOLDEN_EXPECTED:
        yield "\t".join(row)


# --- engineered editions -----------------------------------------------------
#
# ed1998: class 2 has 935 records, 239 of them special-auxiliary subdivisions;
#         class 6 has 9613 special-auxiliary records; common-auxiliary records
#         total 6812 (6809 notations + 3 metadata records).
# ed2008: class 2 has 2419 records, 2168 special; class 6 has 9442 special;
#         common-auxiliary records total 13562 (13559 notations + 3 metadata).

COMMON_SHAPES = [
    lambda i: f"={i}",      # language
    lambda i: f"(1{i})",    # place
    lambda i: f"(0{i})",    # form
    lambda i: f'"{i}"',     # time
    lambda i: f"-0{i}",     # persons and materials
    lambda i: f"(={i})",    # ethnic grouping
]


def edition_lines(label, class2_mains, class2_special, class6_special, common_plain):
    yield f"#label:{label}"
    yield (f"# engineered composition: class 2 = {class2_mains + class2_special} records"
           f" ({class2_special} special), class 6 = {class6_special} special,")
    yield f"# common auxiliaries = {common_plain} notations + 3 metadata records."
    yield "2\tReligion"
    for i in range(10, 10 + class2_mains - 1):
        yield f"2{i}\tReligion division {i}"
    for i in range(1, class2_special + 1):
        yield f"2-{i}\tReligion special subdivision {i}"
    for i in range(1, class6_special + 1):
        yield f"6-{i}\tApplied sciences special subdivision {i}"
    for i in range(1, common_plain + 1):
        yield f"{COMMON_SHAPES[i % 6](i)}\tCommon auxiliary {i}"
    yield "~a\tCoordination sign records"
    yield "~b\tConsecutive extension sign record"
    yield "~h\tNon-UDC notation connector"


# --- 1905-style small edition (lenient flat format, exactly 400 records) -----

def flat_lines():
    yield "# small early edition, flat format, 400 records"
    for d in range(10):
        yield f"{d}  Main class {d}"
    for i in range(100):
        yield f"{i:02d}  Division {i:02d}"
    for i in range(290):
        yield f"{i:03d}  Subdivision {i:03d}"


def main() -> None:
    write("golden.tsv", GOLDEN_INPUT)
    write("golden_expected.tsv", golden_expected_lines())
    write("ed1998.tsv", edition_lines("1998", 696, 239, 9613, 6809))
    write("ed2008.tsv", edition_lines("2008", 251, 2168, 9442, 13559))
    write("ed1905.txt", flat_lines())


if __name__ == "__main__":
    main()
