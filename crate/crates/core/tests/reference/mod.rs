// Reference values from mpmath at 40 significant digits.
pub const GAMMA_TABLE: &[(f64, f64)] = &[
    (0.001, 999.4237724845954453),
    (0.0013513293922282664, 739.4361442320200584),
    (0.0018260911263000155, 547.0423845825384032),
    (0.0024676506118564297, 404.6689744779570516),
    (0.0033346088015516586, 299.3113241630557948),
    (0.004506154885119831, 221.3459152688602217),
    (0.006089299542195412, 163.6512745388435402),
    (0.008228649449450785, 120.9574875249498243),
    (0.011119615859385791, 89.36483561448587311),
    (0.01502626374107559, 65.9875874861588388),
    (0.020305431848689305, 48.69040748713263514),
    (0.02743932687902181, 35.89330253416193563),
    (0.03707956891458125, 26.42728850310932954),
    (0.05010671132542721, 19.42758827280587406),
    (0.06771067176194671, 14.25459958033865025),
    (0.0914994209194391, 10.43540480867712477),
    (0.12364585686030398, 7.620469306311523751),
    (0.1670862806025777, 5.551563868910268623),
    (0.22578860201636294, 4.037983168934591479),
    (0.3051147743348415, 2.938919189196873114),
    (0.41231056256176607, 2.150471712106050561),
    (0.5571673819158861, 1.596311566989547015),
    (0.7529166595738087, 1.221555021359126513),
    (1.0174384119804103, 0.99023032247152655),
    (1.3748944308911806, 0.8889217698277358941),
    (1.8579352556742075, 0.9480456311094190391),
    (2.510682519849696, 1.339400714931704171),
    (3.3927590836266224, 2.958233706715362048),
    (4.584735070454088, 13.09603347546511174),
    (6.195487256284341, 168.0800805381808139),
    (8.37214402859269, 10768.07551015573112),
    (11.31352430180567, 7620676.199338516361),
    (15.288297918718781, 189011915916.9717801),
    (20.659526334706893, 872422460040749911.9),
    (27.917825165603336, 8.293870839330789357e+27),
    (37.726177713369765, 5.106974797720934922e+42),
    (50.980492800503534, 2.817409182827284233e+64),
    (68.89143835160196, 1.567506216350542581e+96),
    (93.09502551740124, 1.912581878333943094e+142),
    (125.8020442519048, 7.234439342880123644e+208),
    (170.0, 4.269068009004705275e+304),
];

pub const BESSEL_K_TABLE: &[(f64, f64, f64)] = &[
    (-29.3, 0.001, 2.189944461106051145e+126),
    (-29.3, 0.02, 1.660552830235164197e+88),
    (-29.3, 0.3, 5.760166795421208482e+53),
    (-29.3, 1.0, 2.732733001233918151e+38),
    (-29.3, 1.999, 4.085990745142620511e+29),
    (-29.3, 2.0, 4.026410508515064616e+29),
    (-29.3, 4.5, 1.674438124354224141e+19),
    (-29.3, 11.0, 29650973.68147199579),
    (-29.3, 27.0, 9.114323106370250671e-7),
    (-29.3, 60.0, 1.502374061782001817e-24),
    (-12.0, 0.001, 8.17496045420544028e+46),
    (-12.0, 0.02, 1.995821856090719165e+31),
    (-12.0, 0.3, 153512015927145309.1),
    (-12.0, 1.0, 79914671748.0827427),
    (-12.0, 1.999, 18342859.38910145726),
    (-12.0, 2.0, 18231462.08102415753),
    (-12.0, 4.5, 755.7467950098235365),
    (-12.0, 11.0, 0.002202308005804059707),
    (-12.0, 27.0, 5.965168571057686975e-12),
    (-12.0, 60.0, 4.630938063529372395e-27),
    (-3.6, 0.001, 1421913884729.881855),
    (-3.6, 0.02, 29454296.13875360292),
    (-3.6, 0.3, 1704.074185975995278),
    (-3.6, 1.0, 20.52162742161864385),
    (-3.6, 1.999, 1.309099355085048889),
    (-3.6, 2.0, 1.30631568309296002),
    (-3.6, 4.5, 0.02274162872611683486),
    (-3.6, 11.0, 0.00001093608496187620498),
    (-3.6, 27.0, 5.710677971550828249e-13),
    (-3.6, 60.0, 1.573709106369460222e-27),
    (-0.5, 0.001, 39.5936595131166432),
    (-0.5, 0.02, 8.686784565775181281),
    (-0.5, 0.3, 1.695161056339283136),
    (-0.5, 1.0, 0.4610685044478945584),
    (-0.5, 1.999, 0.1200877954314500523),
    (-0.5, 2.0, 0.1199377719680614474),
    (-0.5, 4.5, 0.006563394564634540932),
    (-0.5, 11.0, 6.311379501986199648e-6),
    (-0.5, 27.0, 4.533431365420322551e-13),
    (-0.5, 60.0, 1.416822350035369448e-27),
    (0.0, 0.001, 7.023688800562381323),
    (0.0, 0.02, 4.02845733035871626),
    (0.0, 0.3, 1.372460060544297411),
    (0.0, 1.0, 0.4210244382407083333),
    (0.0, 1.999, 0.1140338305892329087),
    (0.0, 2.0, 0.1138938727495334357),
    (0.0, 4.5, 0.006399857243233975046),
    (0.0, 11.0, 6.243020547653677145e-6),
    (0.0, 27.0, 4.512864531191103181e-13),
    (0.0, 60.0, 1.413897840559107809e-27),
    (0.2, 0.001, 9.860620951098159166),
    (0.2, 0.02, 4.607742709323405827),
    (0.2, 0.3, 1.420457614020596597),
    (0.2, 1.0, 0.4272199951367349922),
    (0.2, 1.999, 0.1149834046629094536),
    (0.2, 2.0, 0.1148418755182362168),
    (0.2, 4.5, 0.006425761213879255137),
    (0.2, 11.0, 6.253909302908409884e-6),
    (0.2, 27.0, 4.516149015730819826e-13),
    (0.2, 60.0, 1.414365358275654556e-27),
    (0.5, 0.001, 39.5936595131166432),
    (0.5, 0.02, 8.686784565775181281),
    (0.5, 0.3, 1.695161056339283136),
    (0.5, 1.0, 0.4610685044478945584),
    (0.5, 1.999, 0.1200877954314500523),
    (0.5, 2.0, 0.1199377719680614474),
    (0.5, 4.5, 0.006563394564634540932),
    (0.5, 11.0, 6.311379501986199648e-6),
    (0.5, 27.0, 4.533431365420322551e-13),
    (0.5, 60.0, 1.416822350035369448e-27),
    (1.0, 0.001, 999.9962381560855535),
    (1.0, 0.02, 49.95471781576441724),
    (1.0, 0.3, 3.055992033457325107),
    (1.0, 1.0, 0.6019072301972345747),
    (1.0, 1.999, 0.1400498420771096626),
    (1.0, 2.0, 0.1398658818165224273),
    (1.0, 4.5, 0.007078094908968089693),
    (1.0, 11.0, 6.520860674580886056e-6),
    (1.0, 27.0, 4.595689403699232047e-13),
    (1.0, 60.0, 1.425632026517104323e-27),
    (2.75, 0.001, 962023183.1408208885),
    (2.75, 0.02, 254289.4227961439885),
    (2.75, 0.3, 146.4068593602339377),
    (2.75, 1.0, 4.731184839919540765),
    (2.75, 1.999, 0.4985841925473417821),
    (2.75, 2.0, 0.4976876225514758231),
    (2.75, 4.5, 0.01353863122932288894),
    (2.75, 11.0, 8.667278722174563223e-6),
    (2.75, 27.0, 5.177770844874968324e-13),
    (2.75, 60.0, 1.505077981978788769e-27),
    (6.5, 0.001, 4.119878538594238281e+23),
    (6.5, 0.02, 1439400217977119.774),
    (6.5, 0.3, 32495290.48283099919),
    (6.5, 1.0, 12452.07709962428834),
    (6.5, 1.999, 120.8401714009301676),
    (6.5, 2.0, 120.426893194368698),
    (6.5, 4.5, 0.3168279236629664592),
    (6.5, 11.0, 0.00003776995256083969216),
    (6.5, 27.0, 9.699278451571372942e-13),
    (6.5, 60.0, 2.004158745652687776e-27),
    (13.1, 0.001, 5.40350598559100385e+51),
    (13.1, 0.02, 4.888539328456540734e+34),
    (13.1, 0.3, 1.912404268049668129e+19),
    (13.1, 1.0, 2652839330749.855046),
    (13.1, 1.999, 285958980.512991484),
    (13.1, 2.0, 284068304.7048913142),
    (13.1, 4.5, 4978.949117455963314),
    (13.1, 11.0, 0.006299661834449749184),
    (13.1, 27.0, 9.706720172452057928e-12),
    (13.1, 60.0, 5.808878690543009495e-27),
    (21.0, 0.001, 2.551082624237294358e+87),
    (21.0, 0.02, 1.216444921849304931e+60),
    (21.0, 0.3, 2.436069162580668802e+35),
    (21.0, 1.0, 2.519402948201736154e+24),
    (21.0, 1.999, 1169475825524768817.0),
    (21.0, 2.0, 1157199837194069405.0),
    (21.0, 4.5, 38023304373.53384688),
    (21.0, 11.0, 80.20962843996697542),
    (21.0, 27.0, 9.958762589901310484e-10),
    (21.0, 60.0, 5.228538658640434475e-26),
    (30.0, 0.001, 4.74688478434454839e+129),
    (30.0, 0.02, 4.420865752479839771e+90),
    (30.0, 0.3, 2.303743404810991485e+55),
    (30.0, 1.0, 4.706145526783626883e+39),
    (30.0, 1.999, 4.335841106931291327e+30),
    (30.0, 2.0, 4.271125754887687558e+30),
    (30.0, 4.5, 1.010306778255090918e+20),
    (30.0, 11.0, 97644411.99305787809),
    (30.0, 27.0, 1.759866168412651129e-6),
    (30.0, 60.0, 2.091640547031650548e-24),
];
