"""Reference digit expansions of the thirteen nontrivial roots of y^5 = y
in the 10-adic integers (trailing digits, most significant first)."""

ROOT_TAILS = {
    1: "538207781991786760045215487480163574218751",
    2: "553032451441224165530407839804103263499879186432",
    3: "90779454884838576212137588152996418333704193",
    4: "317662666830362972182803640476581907922943",
    5: "23230896109004106619977392256259918212890624",
    6: "23423230896109004106619977392256259918212890625",
    7: "6576769103890995893380022607743740081787109375",
    8: "76769103890995893380022607743740081787109376",
    9: "220545115161423787862411847003581666295807",
    10: "5682337333169637027817196359523418092077057",
    11: "967548558775834469592160195896736500120813568",
    12: "1792218008213239954784512519836425781249",
    13: "999999999999999999999999999999999999999999999",
}
