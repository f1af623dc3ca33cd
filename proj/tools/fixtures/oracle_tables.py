#!/usr/bin/env python3
"""Write tests/oracle/pari_dimensions.hpp: dim S_k(Gamma0(N)) and its new part from PARI/GP.

    python3 tools/fixtures/oracle_tables.py > tests/oracle/pari_dimensions.hpp
"""
import cypari

pari = cypari.pari
levels = list(range(1, 41)) + [64, 81, 121, 1888]

print("#pragma once")
print()
print(f"// Generated by tools/fixtures/oracle_tables.py with PARI/GP {'.'.join(str(x) for x in pari('version()')[:3])}.")
print("// Columns: k, N, mfdim([N,k],1), mfdim([N,k],0).")
print()
print("#include <array>")
print()
print("struct DimRow {")
print("    unsigned k;")
print("    unsigned long N;")
print("    long cusp;")
print("    long new_part;")
print("};")
print()
rows = []
for k in (2, 4, 6, 8, 12):
    for N in levels:
        rows.append((k, N, int(pari(f"mfdim([{N},{k}],1)")), int(pari(f"mfdim([{N},{k}],0)"))))
print(f"inline constexpr std::array<DimRow, {len(rows)}> kPariDims{{{{")
for r in rows:
    print("    {%d, %d, %d, %d}," % r)
print("}};")
