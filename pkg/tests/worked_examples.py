"""Worked examples, frozen as text.  Each row is (map, source, image)."""

T_OF = [
    ((0, 1, 1, 0, 1, 0, 0), (0, 1, 1, 2, 3, 4, 4)),
    ((1, 1, 0, 0, 0, 1), (1, 1, 2, 2, 2, 3)),
    ((0, 0, 0), (0, 0, 0)),
]

MAP_ROWS = [
    ("F_P", "16,10,10,6,3,2,1,1,1", "22,15,14,9,6,5,4,3,2,-1,-2,-3,-7,-8,-9"),
    ("F_D", "14,13,5,4,2,1", "18,16,8,6,4,2,-1,-3,-5,-6"),
    ("F_RR1", "16,14,11,6,4,1", "19,16,13,8,5,2,-1,-4,-6"),
    ("H_GG1", "20,17,15,12,9,7,4,1", "16,16,16,16,16,16,16,16,-3,-5,-9,-11,-15"),
    ("G_GG1", "20,17,15,12,9,7,4,1", "30,26,22,18,14,10,6,2,-3,-5,-9,-11,-15"),
    ("PHI_LG1", "31,26,24,21,17,14,11,7,4", "32,28,26,24,22,20,18,16,14,-3,-5,-9,-11,-17"),
]

# small hand-computed cases
HAND_ROWS = [
    ("H_GG1", "6,2", "4,4"),
    ("G_GG1", "4", "4"),
    ("PHI_LG1", "6,4", "6,4"),
]

# The RR1 image is lambda + t(A) termwise, so its fourth part is 11 + 2 = 13.
# Writing 11 there instead gives a weight-50 vector, which is the image of a
# different partition.
OFF_BY_TWO_RR1_IMAGE = "19,16,11,8,5,2,-1,-4,-6"
RR1_T_OF_A = (1, 1, 2, 2, 2, 3)
