//! Bundled catalog data.

pub const EXPECTED_TABLES: &str = include_str!("../../../../data/expected_tables.json");

pub const SYSTEMS: &[(&str, &str)] = &[
    ("00_H_VI.json", include_str!("../../../../data/systems/00_H_VI.json")),
    ("01_H_V.json", include_str!("../../../../data/systems/01_H_V.json")),
    ("02_H_III_D6.json", include_str!("../../../../data/systems/02_H_III_D6.json")),
    ("03_H_III_D7.json", include_str!("../../../../data/systems/03_H_III_D7.json")),
    ("04_H_III_D8.json", include_str!("../../../../data/systems/04_H_III_D8.json")),
    ("05_H_IV.json", include_str!("../../../../data/systems/05_H_IV.json")),
    ("06_H_II.json", include_str!("../../../../data/systems/06_H_II.json")),
    ("07_H_I.json", include_str!("../../../../data/systems/07_H_I.json")),
    ("08_H_Gar_1_1_1_1_1.json", include_str!("../../../../data/systems/08_H_Gar_1_1_1_1_1.json")),
    ("09_H_Gar_2_1_1_1.json", include_str!("../../../../data/systems/09_H_Gar_2_1_1_1.json")),
    ("10_H_Gar_3_2_1_1_1.json", include_str!("../../../../data/systems/10_H_Gar_3_2_1_1_1.json")),
    ("11_H_Gar_3_2_2_1.json", include_str!("../../../../data/systems/11_H_Gar_3_2_2_1.json")),
    ("12_H_Gar_3_2_3_2_1.json", include_str!("../../../../data/systems/12_H_Gar_3_2_3_2_1.json")),
    ("13_H_Gar_3_1_1.json", include_str!("../../../../data/systems/13_H_Gar_3_1_1.json")),
    ("14_H_Gar_2_2_1.json", include_str!("../../../../data/systems/14_H_Gar_2_2_1.json")),
    ("15_H_Gar_5_2_1_1.json", include_str!("../../../../data/systems/15_H_Gar_5_2_1_1.json")),
    ("16_H_Gar_4_1.json", include_str!("../../../../data/systems/16_H_Gar_4_1.json")),
    ("17_H_Gar_3_2.json", include_str!("../../../../data/systems/17_H_Gar_3_2.json")),
    ("18_H_Gar_5_2_2.json", include_str!("../../../../data/systems/18_H_Gar_5_2_2.json")),
    ("19_H_Gar_7_2_1.json", include_str!("../../../../data/systems/19_H_Gar_7_2_1.json")),
    ("20_H_Gar_3_2_3.json", include_str!("../../../../data/systems/20_H_Gar_3_2_3.json")),
    ("21_H_Gar_5_2_3_2.json", include_str!("../../../../data/systems/21_H_Gar_5_2_3_2.json")),
    ("22_H_Gar_5.json", include_str!("../../../../data/systems/22_H_Gar_5.json")),
    ("23_H_Gar_9_2.json", include_str!("../../../../data/systems/23_H_Gar_9_2.json")),
    ("24_H_FS_A5.json", include_str!("../../../../data/systems/24_H_FS_A5.json")),
    ("25_H_FS_A4.json", include_str!("../../../../data/systems/25_H_FS_A4.json")),
    ("26_H_FS_A3.json", include_str!("../../../../data/systems/26_H_FS_A3.json")),
    ("27_H_Suz_3_2_2.json", include_str!("../../../../data/systems/27_H_Suz_3_2_2.json")),
    ("28_H_KFS_3_2_3_2.json", include_str!("../../../../data/systems/28_H_KFS_3_2_3_2.json")),
    ("29_H_KFS_4_3_3_2.json", include_str!("../../../../data/systems/29_H_KFS_4_3_3_2.json")),
    ("30_H_KFS_4_3_4_3.json", include_str!("../../../../data/systems/30_H_KFS_4_3_4_3.json")),
    ("31_H_NY_A5.json", include_str!("../../../../data/systems/31_H_NY_A5.json")),
    ("32_H_NY_A4.json", include_str!("../../../../data/systems/32_H_NY_A4.json")),
    ("33_H_Ss_D6.json", include_str!("../../../../data/systems/33_H_Ss_D6.json")),
    ("34_H_Ss_D5.json", include_str!("../../../../data/systems/34_H_Ss_D5.json")),
    ("35_H_Ss_D4.json", include_str!("../../../../data/systems/35_H_Ss_D4.json")),
    ("36_H_KSs_3_2_2.json", include_str!("../../../../data/systems/36_H_KSs_3_2_2.json")),
    ("37_H_KSs_4_3_2.json", include_str!("../../../../data/systems/37_H_KSs_4_3_2.json")),
    ("38_H_KSs_5_4_2.json", include_str!("../../../../data/systems/38_H_KSs_5_4_2.json")),
    ("39_H_KSs_3_2_5_4.json", include_str!("../../../../data/systems/39_H_KSs_3_2_5_4.json")),
    ("40_H_VI_Mat.json", include_str!("../../../../data/systems/40_H_VI_Mat.json")),
    ("41_H_V_Mat.json", include_str!("../../../../data/systems/41_H_V_Mat.json")),
    ("42_H_III_D6_Mat.json", include_str!("../../../../data/systems/42_H_III_D6_Mat.json")),
    ("43_H_III_D7_Mat.json", include_str!("../../../../data/systems/43_H_III_D7_Mat.json")),
    ("44_H_III_D8_Mat.json", include_str!("../../../../data/systems/44_H_III_D8_Mat.json")),
    ("45_H_IV_Mat.json", include_str!("../../../../data/systems/45_H_IV_Mat.json")),
    ("46_H_II_Mat.json", include_str!("../../../../data/systems/46_H_II_Mat.json")),
    ("47_H_I_Mat.json", include_str!("../../../../data/systems/47_H_I_Mat.json")),
];
