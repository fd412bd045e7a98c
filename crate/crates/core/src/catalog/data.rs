// Transcribed table of the 218 non-isomorphic four-message problems; do not edit by hand.

use super::Technique::{self, *};

/// `(problem number, side-information sequence, sum-capacity numerator, denominator, grouping)`
pub(super) const ENTRIES: [(u16, &str, i64, i64, Technique); 218] = [
    (1, "(1|-),(2|-),(3|-),(4|-)", 15, 1, AllServer),
    (2, "(1|2),(2|-),(3|-),(4|-)", 15, 1, AllServer),
    (3, "(1|2,3),(2|-),(3|-),(4|-)", 15, 1, AllServer),
    (4, "(1|-),(2|-),(3|4),(4|3)", 19, 1, AggregateTouch2),
    (5, "(1|-),(2|-),(3|4),(4|2)", 15, 1, AllServer),
    (6, "(1|-),(2|-),(3|2),(4|2)", 15, 1, AllServer),
    (7, "(1|-),(2|-),(3|2),(4|1)", 15, 1, AllServer),
    (8, "(1|2,3,4),(2|-),(3|-),(4|-)", 15, 1, AllServer),
    (9, "(1|-),(2|-),(3|4),(4|2,3)", 19, 1, AggregateTouch2),
    (10, "(1|-),(2|-),(3|4),(4|1,2)", 15, 1, AllServer),
    (11, "(1|-),(2|-),(3|2),(4|2,3)", 15, 1, AllServer),
    (12, "(1|-),(2|-),(3|2),(4|1,3)", 15, 1, AllServer),
    (13, "(1|-),(2|-),(3|2),(4|1,2)", 15, 1, AllServer),
    (14, "(1|-),(2|4),(3|4),(4|3)", 21, 1, AggregateTouch2),
    (15, "(1|-),(2|4),(3|4),(4|1)", 15, 1, AllServer),
    (16, "(1|-),(2|4),(3|2),(4|3)", 19, 1, Fd2),
    (17, "(1|-),(2|4),(3|2),(4|1)", 15, 1, AllServer),
    (18, "(1|-),(2|4),(3|1),(4|2)", 19, 1, AggregateTouch2),
    (19, "(1|-),(2|4),(3|1),(4|1)", 15, 1, AllServer),
    (20, "(1|-),(2|1),(3|1),(4|1)", 15, 1, AllServer),
    (21, "(1|2,3,4),(2|1),(3|-),(4|-)", 19, 1, AggregateTouch2),
    (22, "(1|-),(2|-),(3|2),(4|1,2,3)", 15, 1, AllServer),
    (23, "(1|-),(2|-),(3|2,4),(4|2,3)", 19, 1, AggregateTouch2),
    (24, "(1|-),(2|-),(3|2,4),(4|1,3)", 19, 1, AggregateTouch2),
    (25, "(1|-),(2|-),(3|2,4),(4|1,2)", 15, 1, AllServer),
    (26, "(1|-),(2|-),(3|1,2),(4|1,2)", 15, 1, AllServer),
    (27, "(1|-),(2|4),(3|4),(4|2,3)", 21, 1, AggregateTouch2),
    (28, "(1|-),(2|4),(3|4),(4|1,3)", 21, 1, AggregateTouch2),
    (29, "(1|-),(2|4),(3|2),(4|2,3)", 21, 1, AggregateTouch2),
    (30, "(1|-),(2|4),(3|2),(4|1,3)", 19, 1, Fd2),
    (31, "(1|-),(2|4),(3|2),(4|1,2)", 21, 1, AggregateTouch2),
    (32, "(1|-),(2|4),(3|2,4),(4|2)", 21, 1, AggregateTouch2),
    (33, "(1|-),(2|4),(3|2,4),(4|1)", 15, 1, AllServer),
    (34, "(1|-),(2|4),(3|1),(4|2,3)", 19, 1, AggregateTouch2),
    (35, "(1|-),(2|4),(3|1),(4|1,3)", 15, 1, AllServer),
    (36, "(1|-),(2|4),(3|1),(4|1,2)", 19, 1, AggregateTouch2),
    (37, "(1|-),(2|4),(3|1,4),(4|2)", 21, 1, AggregateTouch2),
    (38, "(1|-),(2|4),(3|1,4),(4|1)", 15, 1, AllServer),
    (39, "(1|-),(2|4),(3|1,2),(4|1)", 15, 1, AllServer),
    (40, "(1|-),(2|3,4),(3|1),(4|1)", 15, 1, AllServer),
    (41, "(1|-),(2|1),(3|1),(4|1,3)", 15, 1, AllServer),
    (42, "(1|4),(2|4),(3|4),(4|3)", 22, 1, AllServer),
    (43, "(1|4),(2|4),(3|2),(4|3)", 20, 1, AllServer),
    (44, "(1|4),(2|4),(3|2),(4|2)", 22, 1, AllServer),
    (45, "(1|4),(2|4),(3|2),(4|1)", 22, 1, AllServer),
    (46, "(1|4),(2|3),(3|2),(4|1)", 70, 3, Fd2),
    (47, "(1|4),(2|3),(3|1),(4|2)", 56, 3, AllServer),
    (48, "(1|2,3,4),(2|1,3),(3|-),(4|-)", 19, 1, AggregateTouch2),
    (49, "(1|-),(2|-),(3|1,2),(4|1,2,3)", 15, 1, AllServer),
    (50, "(1|-),(2|4),(3|4),(4|1,2,3)", 21, 1, AggregateTouch2),
    (51, "(1|-),(2|4),(3|2),(4|1,2,3)", 21, 1, AggregateTouch2),
    (52, "(1|-),(2|4),(3|2,4),(4|2,3)", 21, 1, AggregateTouch2),
    (53, "(1|-),(2|4),(3|2,4),(4|1,3)", 21, 1, AggregateTouch2),
    (54, "(1|-),(2|4),(3|2,4),(4|1,2)", 21, 1, AggregateTouch2),
    (55, "(1|-),(2|4),(3|1),(4|1,2,3)", 19, 1, AggregateTouch2),
    (56, "(1|-),(2|4),(3|1,4),(4|2,3)", 21, 1, AggregateTouch2),
    (57, "(1|-),(2|4),(3|1,4),(4|1,3)", 21, 1, AggregateTouch2),
    (58, "(1|-),(2|4),(3|1,4),(4|1,2)", 21, 1, AggregateTouch2),
    (59, "(1|-),(2|4),(3|1,2),(4|2,3)", 21, 1, AggregateTouch2),
    (60, "(1|-),(2|4),(3|1,2),(4|1,3)", 19, 1, Fd2),
    (61, "(1|-),(2|4),(3|1,2),(4|1,2)", 21, 1, AggregateTouch2),
    (62, "(1|-),(2|4),(3|1,2,4),(4|2)", 21, 1, AggregateTouch2),
    (63, "(1|-),(2|4),(3|1,2,4),(4|1)", 15, 1, AllServer),
    (64, "(1|-),(2|3,4),(3|2,4),(4|1)", 19, 1, AggregateTouch2),
    (65, "(1|-),(2|3,4),(3|1),(4|1,3)", 15, 1, AllServer),
    (66, "(1|-),(2|3,4),(3|1),(4|1,2)", 19, 1, AggregateTouch2),
    (67, "(1|-),(2|1),(3|1),(4|1,2,3)", 15, 1, AllServer),
    (68, "(1|-),(2|1),(3|1,4),(4|1,3)", 19, 1, AggregateTouch2),
    (69, "(1|-),(2|1),(3|1,4),(4|1,2)", 15, 1, AllServer),
    (70, "(1|-),(2|1),(3|1,2),(4|1,2)", 15, 1, AllServer),
    (71, "(1|4),(2|4),(3|4),(4|2,3)", 22, 1, AllServer),
    (72, "(1|4),(2|4),(3|2),(4|2,3)", 22, 1, AllServer),
    (73, "(1|4),(2|4),(3|2),(4|1,3)", 22, 1, AllServer),
    (74, "(1|4),(2|4),(3|2),(4|1,2)", 22, 1, AllServer),
    (75, "(1|4),(2|4),(3|2,4),(4|3)", 22, 1, AllServer),
    (76, "(1|4),(2|4),(3|2,4),(4|2)", 22, 1, AllServer),
    (77, "(1|4),(2|4),(3|2,4),(4|1)", 22, 1, AllServer),
    (78, "(1|4),(2|4),(3|1,2),(4|3)", 20, 1, AllServer),
    (79, "(1|4),(2|4),(3|1,2),(4|2)", 22, 1, AllServer),
    (80, "(1|4),(2|3),(3|2),(4|2,3)", 22, 1, AllServer),
    (81, "(1|4),(2|3),(3|2),(4|1,3)", 47, 2, Fd2),
    (82, "(1|4),(2|3),(3|2,4),(4|2)", 22, 1, AllServer),
    (83, "(1|4),(2|3),(3|1),(4|2,3)", 20, 1, AllServer),
    (84, "(1|4),(2|3),(3|1),(4|1,2)", 22, 1, AllServer),
    (85, "(1|4),(2|3,4),(3|1),(4|3)", 20, 1, AllServer),
    (86, "(1|2,3,4),(2|1,3,4),(3|-),(4|-)", 19, 1, AggregateTouch2),
    (87, "(1|-),(2|4),(3|2,4),(4|1,2,3)", 21, 1, AggregateTouch2),
    (88, "(1|-),(2|4),(3|1,4),(4|1,2,3)", 21, 1, AggregateTouch2),
    (89, "(1|-),(2|4),(3|1,2),(4|1,2,3)", 21, 1, AggregateTouch2),
    (90, "(1|-),(2|4),(3|1,2,4),(4|2,3)", 21, 1, AggregateTouch2),
    (91, "(1|-),(2|4),(3|1,2,4),(4|1,3)", 21, 1, AggregateTouch2),
    (92, "(1|-),(2|4),(3|1,2,4),(4|1,2)", 21, 1, AggregateTouch2),
    (93, "(1|-),(2|3,4),(3|2,4),(4|2,3)", 25, 1, AggregateTouch3),
    (94, "(1|-),(2|3,4),(3|2,4),(4|1,3)", 21, 1, AggregateTouch2),
    (95, "(1|-),(2|3,4),(3|1),(4|1,2,3)", 19, 1, AggregateTouch2),
    (96, "(1|-),(2|3,4),(3|1,4),(4|1,3)", 21, 1, AggregateTouch2),
    (97, "(1|-),(2|3,4),(3|1,4),(4|1,2)", 21, 1, AggregateTouch2),
    (98, "(1|-),(2|3,4),(3|1,2),(4|1,2)", 21, 1, AggregateTouch2),
    (99, "(1|-),(2|1),(3|1,4),(4|1,2,3)", 19, 1, AggregateTouch2),
    (100, "(1|-),(2|1),(3|1,2),(4|1,2,3)", 15, 1, AllServer),
    (101, "(1|-),(2|1,4),(3|1,4),(4|1,3)", 21, 1, AggregateTouch2),
    (102, "(1|-),(2|1,4),(3|1,2),(4|1,3)", 19, 1, Fd2),
    (103, "(1|4),(2|4),(3|4),(4|1,2,3)", 22, 1, AllServer),
    (104, "(1|4),(2|4),(3|2),(4|1,2,3)", 22, 1, AllServer),
    (105, "(1|4),(2|4),(3|2,4),(4|2,3)", 22, 1, AllServer),
    (106, "(1|4),(2|4),(3|2,4),(4|1,3)", 22, 1, AllServer),
    (107, "(1|4),(2|4),(3|2,4),(4|1,2)", 22, 1, AllServer),
    (108, "(1|4),(2|4),(3|1,2),(4|2,3)", 22, 1, AllServer),
    (109, "(1|4),(2|4),(3|1,2),(4|1,2)", 22, 1, AllServer),
    (110, "(1|4),(2|4),(3|1,2,4),(4|3)", 22, 1, AllServer),
    (111, "(1|4),(2|4),(3|1,2,4),(4|2)", 22, 1, AllServer),
    (112, "(1|4),(2|3),(3|2),(4|1,2,3)", 47, 2, Fd2),
    (113, "(1|4),(2|3),(3|2,4),(4|2,3)", 22, 1, AllServer),
    (114, "(1|4),(2|3),(3|2,4),(4|1,3)", 24, 1, AllServer),
    (115, "(1|4),(2|3),(3|2,4),(4|1,2)", 47, 2, Fd2),
    (116, "(1|4),(2|3),(3|1),(4|1,2,3)", 22, 1, AllServer),
    (117, "(1|4),(2|3),(3|1,4),(4|2,3)", 22, 1, AllServer),
    (118, "(1|4),(2|3),(3|1,4),(4|1,2)", 22, 1, AllServer),
    (119, "(1|4),(2|3),(3|1,2),(4|1,2)", 47, 2, Fd2),
    (120, "(1|4),(2|3,4),(3|2,4),(4|3)", 22, 1, AllServer),
    (121, "(1|4),(2|3,4),(3|2,4),(4|1)", 24, 1, AllServer),
    (122, "(1|4),(2|3,4),(3|1),(4|2,3)", 22, 1, AllServer),
    (123, "(1|4),(2|3,4),(3|1),(4|1,3)", 22, 1, AllServer),
    (124, "(1|4),(2|3,4),(3|1),(4|1,2)", 22, 1, AllServer),
    (125, "(1|4),(2|3,4),(3|1,4),(4|3)", 22, 1, AllServer),
    (126, "(1|4),(2|3,4),(3|1,4),(4|2)", 22, 1, AllServer),
    (127, "(1|4),(2|3,4),(3|1,4),(4|1)", 22, 1, AllServer),
    (128, "(1|4),(2|3,4),(3|1,2),(4|3)", 22, 1, AllServer),
    (129, "(1|4),(2|3,4),(3|1,2),(4|1)", 24, 1, AllServer),
    (130, "(1|4),(2|1),(3|1,2),(4|2,3)", 20, 1, AllServer),
    (131, "(1|4),(2|1),(3|1,2),(4|1,2)", 22, 1, AllServer),
    (132, "(1|4),(2|1),(3|1,2,4),(4|2)", 20, 1, AllServer),
    (133, "(1|4),(2|1,4),(3|1,4),(4|1)", 22, 1, AllServer),
    (134, "(1|2,3,4),(2|1,3,4),(3|1),(4|-)", 21, 1, AggregateTouch2),
    (135, "(1|-),(2|3,4),(3|2,4),(4|1,2,3)", 25, 1, AggregateTouch3),
    (136, "(1|-),(2|3,4),(3|1,4),(4|1,2,3)", 21, 1, AggregateTouch2),
    (137, "(1|-),(2|3,4),(3|1,2),(4|1,2,3)", 21, 1, AggregateTouch2),
    (138, "(1|-),(2|1),(3|1,2,4),(4|1,2,3)", 19, 1, AggregateTouch2),
    (139, "(1|-),(2|1,4),(3|1,4),(4|1,2,3)", 21, 1, AggregateTouch2),
    (140, "(1|-),(2|1,4),(3|1,2),(4|1,2,3)", 21, 1, AggregateTouch2),
    (141, "(1|-),(2|1,4),(3|1,2,4),(4|1,2)", 21, 1, AggregateTouch2),
    (142, "(1|4),(2|4),(3|2,4),(4|1,2,3)", 22, 1, AllServer),
    (143, "(1|4),(2|4),(3|1,2),(4|1,2,3)", 22, 1, AllServer),
    (144, "(1|4),(2|4),(3|1,2,4),(4|2,3)", 22, 1, AllServer),
    (145, "(1|4),(2|4),(3|1,2,4),(4|1,2)", 22, 1, AllServer),
    (146, "(1|4),(2|3),(3|2,4),(4|1,2,3)", 24, 1, AllServer),
    (147, "(1|4),(2|3),(3|1,4),(4|1,2,3)", 22, 1, AllServer),
    (148, "(1|4),(2|3),(3|1,2),(4|1,2,3)", 47, 2, Fd2),
    (149, "(1|4),(2|3,4),(3|2,4),(4|2,3)", 26, 1, AggregateTouch2),
    (150, "(1|4),(2|3,4),(3|2,4),(4|1,3)", 24, 1, AllServer),
    (151, "(1|4),(2|3,4),(3|1),(4|1,2,3)", 22, 1, AllServer),
    (152, "(1|4),(2|3,4),(3|1,4),(4|2,3)", 22, 1, AllServer),
    (153, "(1|4),(2|3,4),(3|1,4),(4|1,3)", 22, 1, AllServer),
    (154, "(1|4),(2|3,4),(3|1,4),(4|1,2)", 22, 1, AllServer),
    (155, "(1|4),(2|3,4),(3|1,2),(4|2,3)", 24, 1, AllServer),
    (156, "(1|4),(2|3,4),(3|1,2),(4|1,3)", 24, 1, AllServer),
    (157, "(1|4),(2|3,4),(3|1,2),(4|1,2)", 24, 1, AllServer),
    (158, "(1|4),(2|3,4),(3|1,2,4),(4|3)", 22, 1, AllServer),
    (159, "(1|4),(2|3,4),(3|1,2,4),(4|2)", 22, 1, AllServer),
    (160, "(1|4),(2|3,4),(3|1,2,4),(4|1)", 24, 1, AllServer),
    (161, "(1|4),(2|1),(3|1,2),(4|1,2,3)", 22, 1, AllServer),
    (162, "(1|4),(2|1),(3|1,2,4),(4|2,3)", 22, 1, AllServer),
    (163, "(1|4),(2|1),(3|1,2,4),(4|1,2)", 22, 1, AllServer),
    (164, "(1|4),(2|1,4),(3|1,4),(4|2,3)", 22, 1, AllServer),
    (165, "(1|4),(2|1,4),(3|1,4),(4|1,3)", 22, 1, AllServer),
    (166, "(1|4),(2|1,4),(3|1,2),(4|2,3)", 22, 1, AllServer),
    (167, "(1|4),(2|1,4),(3|1,2),(4|1,3)", 22, 1, AllServer),
    (168, "(1|4),(2|1,4),(3|1,2),(4|1,2)", 22, 1, AllServer),
    (169, "(1|4),(2|1,4),(3|1,2,4),(4|1)", 22, 1, AllServer),
    (170, "(1|4),(2|1,3),(3|1,2),(4|2,3)", 24, 1, AllServer),
    (171, "(1|4),(2|1,3),(3|1,2),(4|1,3)", 24, 1, AllServer),
    (172, "(1|2,3,4),(2|1,3,4),(3|1,2),(4|-)", 25, 1, AggregateTouch3),
    (173, "(1|-),(2|1,4),(3|1,2,4),(4|1,2,3)", 21, 1, AggregateTouch2),
    (174, "(1|4),(2|4),(3|1,2,4),(4|1,2,3)", 22, 1, AllServer),
    (175, "(1|4),(2|3),(3|1,2,4),(4|1,2,3)", 24, 1, AllServer),
    (176, "(1|4),(2|3,4),(3|2,4),(4|1,2,3)", 26, 1, AggregateTouch2),
    (177, "(1|4),(2|3,4),(3|1,4),(4|1,2,3)", 22, 1, AllServer),
    (178, "(1|4),(2|3,4),(3|1,2),(4|1,2,3)", 24, 1, AllServer),
    (179, "(1|4),(2|3,4),(3|1,2,4),(4|2,3)", 26, 1, AggregateTouch2),
    (180, "(1|4),(2|3,4),(3|1,2,4),(4|1,3)", 24, 1, AllServer),
    (181, "(1|4),(2|3,4),(3|1,2,4),(4|1,2)", 24, 1, AllServer),
    (182, "(1|4),(2|1),(3|1,2,4),(4|1,2,3)", 22, 1, AllServer),
    (183, "(1|4),(2|1,4),(3|1,4),(4|1,2,3)", 22, 1, AllServer),
    (184, "(1|4),(2|1,4),(3|1,2),(4|1,2,3)", 22, 1, AllServer),
    (185, "(1|4),(2|1,4),(3|1,2,4),(4|2,3)", 22, 1, AllServer),
    (186, "(1|4),(2|1,4),(3|1,2,4),(4|1,3)", 22, 1, AllServer),
    (187, "(1|4),(2|1,4),(3|1,2,4),(4|1,2)", 22, 1, AllServer),
    (188, "(1|4),(2|1,3),(3|1,2),(4|1,2,3)", 24, 1, AllServer),
    (189, "(1|4),(2|1,3),(3|1,2,4),(4|2,3)", 24, 1, AllServer),
    (190, "(1|4),(2|1,3),(3|1,2,4),(4|1,3)", 24, 1, AllServer),
    (191, "(1|4),(2|1,3),(3|1,2,4),(4|1,2)", 24, 1, AllServer),
    (192, "(1|4),(2|1,3,4),(3|1,2,4),(4|1)", 24, 1, AllServer),
    (193, "(1|3,4),(2|3,4),(3|2,4),(4|2,3)", 28, 1, AllServer),
    (194, "(1|3,4),(2|3,4),(3|2,4),(4|1,3)", 24, 1, AllServer),
    (195, "(1|3,4),(2|3,4),(3|2,4),(4|1,2)", 24, 1, AllServer),
    (196, "(1|3,4),(2|3,4),(3|1,2),(4|1,2)", 24, 1, AllServer),
    (197, "(1|3,4),(2|1,4),(3|2,4),(4|2,3)", 24, 1, AllServer),
    (198, "(1|3,4),(2|1,4),(3|1,2),(4|2,3)", 24, 1, AllServer),
    (199, "(1|2,3,4),(2|1,3,4),(3|1,2,4),(4|-)", 25, 1, AggregateTouch3),
    (200, "(1|4),(2|3,4),(3|1,2,4),(4|1,2,3)", 26, 1, AggregateTouch2),
    (201, "(1|4),(2|1,4),(3|1,2,4),(4|1,2,3)", 22, 1, AllServer),
    (202, "(1|4),(2|1,3),(3|1,2,4),(4|1,2,3)", 24, 1, AllServer),
    (203, "(1|4),(2|1,3,4),(3|1,2,4),(4|2,3)", 26, 1, AggregateTouch2),
    (204, "(1|4),(2|1,3,4),(3|1,2,4),(4|1,3)", 24, 1, AllServer),
    (205, "(1|3,4),(2|3,4),(3|2,4),(4|1,2,3)", 28, 1, AllServer),
    (206, "(1|3,4),(2|3,4),(3|1,2),(4|1,2,3)", 24, 1, AllServer),
    (207, "(1|3,4),(2|1,4),(3|2,4),(4|1,2,3)", 26, 1, AllServer),
    (208, "(1|3,4),(2|1,4),(3|1,2),(4|1,2,3)", 24, 1, AllServer),
    (209, "(1|3,4),(2|1,4),(3|1,2,4),(4|1,3)", 28, 1, AllServer),
    (210, "(1|3,4),(2|1,4),(3|1,2,4),(4|1,2)", 24, 1, AllServer),
    (211, "(1|3,4),(2|1,3,4),(3|1,4),(4|1,3)", 28, 1, AllServer),
    (212, "(1|2,3,4),(2|1,3,4),(3|1,2,4),(4|1)", 26, 1, AggregateTouch2),
    (213, "(1|3,4),(2|3,4),(3|1,2,4),(4|1,2,3)", 28, 1, AllServer),
    (214, "(1|3,4),(2|1,4),(3|1,2,4),(4|1,2,3)", 28, 1, AllServer),
    (215, "(1|3,4),(2|1,3,4),(3|1,4),(4|1,2,3)", 28, 1, AllServer),
    (216, "(1|3,4),(2|1,3,4),(3|1,2),(4|1,2,3)", 24, 1, AllServer),
    (217, "(1|2,3,4),(2|1,3,4),(3|1,2,4),(4|1,2)", 28, 1, AllServer),
    (218, "(1|2,3,4),(2|1,3,4),(3|1,2,4),(4|1,2,3)", 32, 1, AllServer),
];
