"""Built-in family data.

Each entry is transcribed as printed. Where the printed row fails the family
conditions and a single small edit repairs it, the repaired row is added as
well, with `transcription="corrected"` and a note saying what was changed.
The printed row stays in the catalog and is reported invalid.
"""

# polynomial expressions are in the seed variable u
_BLS_P = "(u-1)^2*({r})/3 + u"

COMPLETE = [
    dict(name="BN", k=12, D=3, kind="complete-fixed-D",
         p="36*u^4+36*u^3+24*u^2+6*u+1", r="36*u^4+36*u^3+18*u^2+6*u+1",
         t="6*u^2+1", label="Barreto-Naehrig"),
    dict(name="BLS12", k=12, D=3, kind="complete-fixed-D",
         p=_BLS_P.format(r="u^4-u^2+1"), r="u^4-u^2+1", t="u+1",
         label="Barreto-Lynn-Scott",
         note="printed fraction bar read as ((u-1)^2 r(u))/3 + u"),
    dict(name="BLS24", k=24, D=3, kind="complete-fixed-D",
         p=_BLS_P.format(r="u^8-u^4+1"), r="u^8-u^4+1", t="u+1",
         label="Barreto-Lynn-Scott", transcription="derived",
         note="general BLS formula at k=24; named in the 192-bit recommendations"),
    dict(name="BLS48", k=48, D=3, kind="complete-fixed-D",
         p=_BLS_P.format(r="u^16-u^8+1"), r="u^16-u^8+1", t="u+1",
         label="Barreto-Lynn-Scott",
         note="printed fraction bar read as ((u-1)^2 r(u))/3 + u"),
    # Kachisa-Schaefer-Scott
    dict(name="KSS8-D3-printed", k=8, D=3, kind="complete-fixed-D", rho_printed="5/4",
         p="(u^10+u^9+u^8-u^6+2*u^5-u^4+u^2-32*u+1)/3", r="u^8-u^4+1", t="u^5-u+1",
         label="Kachisa-Schaefer-Scott", transcription="as-printed"),
    dict(name="KSS8-D3", k=8, D=3, kind="complete-fixed-D", rho_printed="5/4",
         p="(u^10+u^9+u^8-u^6+2*u^5-u^4+u^2-2*u+1)/3", r="u^8-u^4+1", t="u^5-u+1",
         label="Kachisa-Schaefer-Scott", transcription="corrected",
         note="linear term -32u replaced by -2u; agrees with a Brezing-Weng "
              "reconstruction from r and t"),
    dict(name="KSS8-D1-printed", k=8, D=1, kind="complete-fixed-D", rho_printed="3/2",
         p="(u^6+2*u^5-3*u^4+8*u^3-15*u^2-8*u+125)/180", r="u^4-8*u^2+25",
         t="(2*u^3-11*u+15)/15", label="Kachisa-Schaefer-Scott",
         transcription="as-printed"),
    dict(name="KSS8-D1", k=8, D=1, kind="complete-fixed-D", rho_printed="3/2",
         p="(u^6+2*u^5-3*u^4+8*u^3-15*u^2-82*u+125)/180", r="u^4-8*u^2+25",
         t="(2*u^3-11*u+15)/15", label="Kachisa-Schaefer-Scott",
         transcription="corrected", note="linear term -8u replaced by -82u"),
    dict(name="KSS16", k=16, D=1, kind="complete-fixed-D", rho_printed="5/4",
         p="(u^10+2*u^9+5*u^8+48*u^6+152*u^5+240*u^4+625*u^2+2398*u+3125)/980",
         r="u^8+48*u^4+625", t="(2*u^5+41*u+35)/35", label="Kachisa-Schaefer-Scott"),
    dict(name="KSS18-printed", k=18, D=3, kind="complete-fixed-D", rho_printed="4/3",
         p="(u^10+5*u^7+7*u^6+37*u^5+188*u^4+259*u^3+343*u^2+1763*u+2401)/21",
         r="u^6+37*u^3+343", t="(u^4+16*u+7)/7", label="Kachisa-Schaefer-Scott",
         transcription="as-printed"),
    dict(name="KSS18", k=18, D=3, kind="complete-fixed-D", rho_printed="4/3",
         p="(u^8+5*u^7+7*u^6+37*u^5+188*u^4+259*u^3+343*u^2+1763*u+2401)/21",
         r="u^6+37*u^3+343", t="(u^4+16*u+7)/7", label="Kachisa-Schaefer-Scott",
         transcription="corrected", note="leading term u^10 replaced by u^8"),
    dict(name="KSS32-printed", k=32, D=1, kind="complete-fixed-D", rho_printed="9/8",
         p="(u^18-6*u^17+13*u^16+57120*u^10+344632*u^9+742560*u^8+815730721*u^2"
           "-4948305594*u+1060449373)/2970292",
         r="u^16+57120*u^8+815730721", t="(-2*u^9+56403*u+3107)/3107",
         label="Kachisa-Schaefer-Scott", transcription="as-printed"),
    dict(name="KSS32-D3-printed", k=32, D=3, kind="complete-fixed-D", rho_printed="7/6",
         p="(u^14+46*u^13+7*u^12+683*u^8-2510*u^7+4781*u^6+117649*u^2-386569*u+823543)/28749",
         r="u^12+683*u^6+117649", t="(2*u^7+757*u+259)/259",
         label="Kachisa-Schaefer-Scott", transcription="as-printed"),
    dict(name="KSS36", k=36, D=3, kind="complete-fixed-D", rho_printed="7/6",
         p="(u^14-4*u^13+7*u^12+683*u^8-2510*u^7+4781*u^6+117649*u^2-386569*u+823543)/28749",
         r="u^12+683*u^6+117649", t="(2*u^7+757*u+259)/259",
         label="Kachisa-Schaefer-Scott", transcription="corrected",
         note="row printed under k=32; r divides Phi_36(t-1), and 46u^13 "
              "replaced by -4u^13"),
    dict(name="KSS40-printed", k=40, D=1, kind="complete-fixed-D", rho_printed="11/8",
         p="(u^22-2*u^21+5*u^20+6232*u^12+10568*u^11+31160*u^10+9765625*u^2"
           "-13398638*u+48828125)/1123",
         r="u^16+8*u^14+39*u^12+112*u^10-79*u^8+2800*u^6+24375*u^4+125000*u^2+390625",
         t="(2*u^11+6469*u+1185)/1185", label="Kachisa-Schaefer-Scott",
         transcription="as-printed"),
    dict(name="KSS40", k=40, D=1, kind="complete-fixed-D", rho_printed="11/8",
         p="(u^22-2*u^21+5*u^20+6232*u^12-10568*u^11+31160*u^10+9765625*u^2"
           "-13398638*u+48828125)/1123380",
         r="u^16+8*u^14+39*u^12+112*u^10-79*u^8+2800*u^6+24375*u^4+125000*u^2+390625",
         t="(2*u^11+6469*u+1185)/1185", label="Kachisa-Schaefer-Scott",
         transcription="corrected",
         note="sign of the u^11 term flipped and denominator 1123 read as 1123380"),
    # Scott-Guillevic; printed digits "310", "39", "36", "35" are lost powers of 3
    dict(name="SG54-printed", k=54, D=3, kind="complete-fixed-D",
         p="3^10*u^20+3^10*u^19+3^9*u^18+3^6*u^11+3^6*u^10+3^5*u^9+3*u^2+3*u+1",
         r="3^9*u^18+3^5*u^9+1", t="3^5*u^10+1", h="3*u^2+3*u+1",
         label="Scott-Guillevic", transcription="as-printed",
         note="superscripts restored: 310 -> 3^10, 39 -> 3^9, 36 -> 3^6, 35 -> 3^5"),
    dict(name="SG54", k=54, D=3, kind="complete-fixed-D",
         p="3^10*u^20+3^10*u^19+3^9*u^18+3^6*u^11+3^6*u^10+3^5*u^10+3^5*u^9+3*u^2+3*u+1",
         r="3^9*u^18+3^5*u^9+1", t="3^5*u^10+1", h="3*u^2+3*u+1",
         label="Scott-Guillevic", transcription="corrected",
         note="superscripts restored and the missing 3^5*u^10 term added; "
              "this makes p + 1 - t = c(u) r(u) with the printed cofactor"),
    dict(name="BW5", k=5, D=1, kind="complete-fixed-D",
         p="(u^14+2*u^12+u^10+u^4-2*u^2+1)/4", r="u^8-u^6+u^4-u^2+1", t="-u^2+1",
         label="Brezing-Weng odd k, D=1",
         note="closed form at k=5 with r = Phi_20; printed x^2k read as x^(2k)"),
]

CVD = [
    dict(name="CVD8", k=8, kind="complete-variable-D", rho_printed="7/4",
         p="(4*u^7-39*u^6+170*u^5-311*u^4+52*u^3+716*u^2-384*u+196)/576",
         r="u^4-4*u^3+8*u^2+8*u+4", t="(-u^3+5*u^2-16*u+14)/12", label="Drylo CVD"),
    dict(name="CVD9-printed", k=9, kind="complete-variable-D", rho_printed="5/3",
         p="(59049*u^10+6561*u^9+8748*u^8+2916*u^7+972*u^6+1296*u^5+108*u^4"
           "+36*u^3+12*u^2+u+1)/4",
         r="729*u^5+27*u^3+1", t="243*u^5+1", label="Drylo CVD",
         transcription="as-printed"),
    dict(name="CVD9", k=9, kind="complete-variable-D", rho_printed="5/3",
         p="(59049*u^10+6561*u^9+8748*u^8+2916*u^7+972*u^6+1296*u^5+108*u^4"
           "+36*u^3+12*u^2+u+1)/4",
         r="729*u^6+27*u^3+1", t="243*u^5+1", label="Drylo CVD",
         transcription="corrected", note="r leading term 729u^5 read as 729u^6 = Phi_9(3u)"),
    dict(name="CVD15", k=15, kind="complete-variable-D", rho_printed="13/8",
         p="(531441*u^13-236196*u^11+39366*u^10+39366*u^9-8748*u^8-729*u^7+486*u^6"
           "-243*u^5+135*u^4+18*u^3+18*u^2+u+1)/4",
         r="6561*u^8-2187*u^7+243*u^5-81*u^4+27*u^3-3*u+1", t="9*u^2+1",
         label="Drylo CVD"),
    dict(name="CVD28-printed", k=28, kind="complete-variable-D", rho_printed="3/2",
         p="(2624144*u^18+65536*u^17-32768*u^15+16384*u^14+12288*u^13-3072*u^11"
           "+2816*u^9-192*u^7+48*u^5+16*u^4-8*u^3+u+1)/4",
         r="4096*u^12-1024*u^10+256*u^8-64*u^6+16*u^4-4*u^2+1", t="512*u^9+1",
         label="Drylo CVD", transcription="as-printed"),
    dict(name="CVD28", k=28, kind="complete-variable-D", rho_printed="3/2",
         p="(262144*u^18+65536*u^17-32768*u^15+16384*u^14+12288*u^13-3072*u^11"
           "+2816*u^9-192*u^7+48*u^5+16*u^4-8*u^3+u+1)/4",
         r="4096*u^12-1024*u^10+256*u^8-64*u^6+16*u^4-4*u^2+1", t="512*u^9+1",
         label="Drylo CVD", transcription="corrected",
         note="leading coefficient 2624144 read as 262144 = 2^18"),
    dict(name="CVD30", k=30, kind="complete-variable-D", rho_printed="13/8",
         p="(244140625*u^13+195312500*u^12+78125000*u^11+19531250*u^10+2353750*u^9"
           "-140625*u^9-43750*u^6-6875*u^5-125*u^4+150*u^3-50*u^2+9*u+1)/4",
         r="390625*u^8+78125*u^7-3125*u^5-625*u^4-125*u^2+5*u+1", t="-25*u^2+1",
         label="Drylo CVD", transcription="as-printed"),
]

SPARSE = [
    dict(name="Freeman10", k=10, kind="sparse",
         p="25*u^4+25*u^3+25*u^2+10*u+3", r="25*u^4+25*u^3+15*u^2+5*u+1",
         t="10*u^2+5*u+3", label="Freeman",
         note="printed CM relation t^2 + 4p = -(15u^2+10u+3) has a sign slip; "
              "4p - t^2 = 15u^2+10u+3"),
    dict(name="MNT3-plus", k=3, kind="sparse", p="12*u^2-1", t="-1+6*u",
         r="12*u^2-6*u+1", label="Miyaji-Nakabayashi-Takano"),
    dict(name="MNT3-minus", k=3, kind="sparse", p="12*u^2-1", t="-1-6*u",
         r="12*u^2+6*u+1", label="Miyaji-Nakabayashi-Takano"),
    dict(name="MNT4-printed", k=4, kind="sparse", p="u^2+u-1", t="-u",
         r="u^2+2*u", label="Miyaji-Nakabayashi-Takano", transcription="as-printed",
         note="r taken as p + 1 - t (prime order)"),
    dict(name="MNT4-a", k=4, kind="sparse", p="u^2+u+1", t="-u",
         r="u^2+2*u+2", label="Miyaji-Nakabayashi-Takano", transcription="corrected",
         note="constant term -1 of p replaced by +1"),
    dict(name="MNT4-b", k=4, kind="sparse", p="u^2+u+1", t="u+1",
         r="u^2+1", label="Miyaji-Nakabayashi-Takano", transcription="corrected",
         note="constant term -1 of p replaced by +1"),
    dict(name="MNT6-plus", k=6, kind="sparse", p="4*u^2+1", t="1+2*u",
         r="4*u^2-2*u+1", label="Miyaji-Nakabayashi-Takano"),
    dict(name="MNT6-minus", k=6, kind="sparse", p="4*u^2+1", t="1-2*u",
         r="4*u^2+2*u+1", label="Miyaji-Nakabayashi-Takano"),
    dict(name="DRYLO8-A", k=8, kind="sparse", rho_printed="1",
         p="25*u^4+25*u^3+15*u^2+5*u+1", r="25*u^4+25*u^3+25*u^2+10*u+4",
         t="10*u^2+5*u+3", label="Drylo sparse", transcription="as-printed"),
    dict(name="DRYLO8-B", k=8, kind="sparse", rho_printed="3/2",
         p="(u^6-6*u^5+7*u^4-36*u^3+135*u^2+186*u-63)/576", r="u^4-2*u^2+9",
         t="(-u^3+3*u^2+5*u+9)/12", label="Drylo sparse"),
    dict(name="DRYLO12", k=12, kind="sparse", rho_printed="3/2",
         p="(u^6-8*u^5+18*u^4-56*u^3+202*u^2+258*u-423)/900",
         r="u^4-2*u^3-3*u^2+4*u+13", t="(-u^3+4*u^2+5*u+6)/12",
         label="Drylo sparse", transcription="as-printed"),
]

# cyclotomic sparse families: only (k, y, g, t, rho) are printed; p follows
# from 4p = t^2 + g y^2 and r is recovered as a factor of Phi_k(t - 1)
CYCLO_SPARSE = [
    (5, "-(2*u^2+2*u+1)", "3*u^2-2*u+3", "u+1", "3/2"),
    (8, "-(3*u^2-u+3)/17", "7*u^2-26*u+7", "-u^3+1", "3/2"),
    (10, "(u^2+3*u+1)/11", "3*u^2+10*u+3", "u^3+1", "3/2"),
    (10, "(7*u^2-u+7)/71", "15*u^2+50*u+15", "u^3+1", "3/2"),
    (7, "(38*u^4-23*u^3+50*u^2-23*u+38)/55", "208*u^2+375*u+208", "u^5+1", "5/3"),
    (9, "-(u^4-18*u^3-4*u^2-18*u+1)/109", "8*u^2+35*u+8", "u^5+1", "5/3"),
    (14, "-(2*u^4-5*u^3+6*u^2-5*u+2)", "4*u^2+5*u+4", "u^5+1", "5/3"),
    (18, "-(3*u^4-2*u^3-8*u^2-2*u+3)/19", "4*u^2+9*u+4", "u^5+1", "5/3"),
    (30, "(433*u^6-293*u^5-149*u^4+637*u^3-149*u^2-293*u+433)/9755",
     "155*u^2+350*u+155", "u^7+1", "7/4"),
    (10, "-(8*u^3-8*u^2+1)/19", "15*u^2+50*u+15", "u+1", "2"),
    (14, "3*u^5-4*u^4+3*u^3-2*u+2", "4*u^2+5*u+4", "-u^2+1", "2"),
    (18, "-(7*u^5-u^4-6*u^2-6*u+10)/19", "4*u^2+9*u+4", "u+1", "2"),
    (18, "(26*u^5-14*u^4-12*u^2-12*u^2-12*u+29)/37", "19*u^2+30*u+19", "u+1", "2"),
    (15, "(20*u^7-8*u^6-22*u^5+20*u^4+14*u^3+6*u^2+7*u-15)/93",
     "3*u^2-18*u+3", "u^2+1", "2"),
    (20, "-(20*u^7+23*u^6-43*u^5-4*u^4+24*u^3+68*u^2-88*u+20)/505",
     "40*u^2-55", "u+1", "2"),
]

# recommended parameter rows; seeds are kept in the printed power-sum form
RECOMMENDED = [
    # (provenance, curve, family, k, D, r_bits, p_bits, pk_bits, seed, extra, bits)
    ("table-2.8", "Cock-Pinch", None, 6, 3, 256, 672, 12255, "2^128-2^124-2^59", None, 128),
    ("table-2.8", "Cock-Pinch", None, 8, 1, 256, 544, 13799, "2^64-2^54+2^37+2^32-4", None, 131),
    ("table-2.8", "Cyclo FM", None, 10, 15, 256, 446, 12255, "2^32-2^26-2^17+2^10-1", "a=-3", 133),
    ("table-2.8", "Cyclo FM", None, 11, 3, 258, 333, 11477, "-2^13+2^10-2^8-2^5-2^3-2", "b=13", 131),
    ("table-2.8", "Cyclo FM", None, 11, 11, 256, 412, 12255, "-2^56+2^21+2^19-2^11-2^9-1", "a=2", 145),
    ("table-2.8", "BN", "BN", 12, 3, 446, 446, 13799, "2^110+2^36+1", "b=257", 132),
    ("table-2.8", "Cyclo BLS", None, 12, 3, 229, 446, 12255, "-2^74-2^73-2^63-2^57-2^50-1", "b=1", 132),
    ("table-2.8", "FK", None, 12, 3, 296, 446, 11477, "-2^72-2^71-2^36", "b=-2", 136),
    ("table-2.8", "Cyclo", None, 13, 3, 267, 310, 12255, "2^11+2^8-2^6-2^4", "b=-17", 140),
    ("table-2.8", "Cyclo", None, 14, 3, 256, 340, 13799, "2^21+2^19+2^10-2^6", "b=-4", 148),
    ("table-2.8", "KSS16", "KSS16", 16, 1, 257, 330, 12255, "-2^34+2^27-2^23+2^20-2^11+1", "a=1", 140),
    ("table-2.8", "KSS16", "KSS16", 16, 1, 256, 330, 11477, "2^34-2^30+2^26+2^23+2^14-2^5+1", "a=1", 140),
    ("table-2.9", "BN", "BN", 12, 3, 1024, 1022, 12255, "-2^254+2^33+2^6", None, 191),
    ("table-2.9", "BLS12", "BLS12", 12, 3, 768, 1150, 13799, "-2^192+2^188-2^115-2^110-2^44-1", None, 193),
    ("table-2.9", "KSS16", "KSS16", 16, 1, 605, 766, 12255, "2^78-2^76-2^28+2^14+2^7+1", None, 194),
    ("table-2.9", "KSS18", "KSS18", 18, 3, 474, 638, 11477, "2^80+2^77+2^76-2^61-2^53-2^14", None, 193),
    ("table-2.9", "BLS24", "BLS24", 24, 3, 409, 509, 12202, "-2^51-2^28+2^11-1", None, 193),
]

# security bands: level, r bits, p^k bits, k for rho=1, k for rho=2 (verbatim text)
BANDS = [
    (80, 160, "960-1280", "6-8", "3-4"),
    (112, 224, "2200-3600", "10-16", "5-8"),
    (128, 256, "3000-5000", "12-20", "6-10"),
    (192, 384, "8000-10000", "20-26", "10-13"),
    (256, 512, "14000-18000", "28-36", "14-18"),
]
