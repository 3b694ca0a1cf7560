#![allow(clippy::excessive_precision)]

// J0 reference values computed at 40 significant digits with mpmath.besselj.
pub const J0_TABLE: &[(f64, f64)] = &[
    (0.0, 1.0),
    (0.1, 0.99750156206604003228),
    (0.5, 0.93846980724081290423),
    (0.7, 0.88120088860740528084),
    (1.0, 0.76519768655796655145),
    (1.3, 0.62008598956150913167),
    (1.5, 0.51182767173591812875),
    (2.0, 0.22389077914123566805),
    (2.404825557695773, -0.00000000000000012011950073676861231),
    (2.5, -0.048383776468197996327),
    (3.0, -0.26005195490193343762),
    (3.5, -0.38012773998726337738),
    (3.999999, -0.39714987590698507632),
    (4.0, -0.39714980986384737229),
    (4.000001, -0.39714974382032902927),
    (4.5, -0.32054250898512142436),
    (5.0, -0.17759677131433830435),
    (5.5, -0.006843869417819196824),
    (5.520078110286311, 0.00000000000000011922994371894896474),
    (6.0, 0.15064525725099693166),
    (6.5, 0.2600946055816063814),
    (7.0, 0.30007927051955559665),
    (7.5, 0.26633965788037839687),
    (8.0, 0.17165080713755390609),
    (8.5, 0.041939251842934503552),
    (9.0, -0.090333611182876134336),
    (9.5, -0.1939287476874223554),
    (10.0, -0.2459357644513483352),
    (10.5, -0.23664819446234712622),
    (11.0, -0.17119030040719608835),
    (11.5, -0.067653948111665228432),
    (11.99, 0.045451560352858556046),
    (12.0, 0.047689310796833536624),
    (12.01, 0.049920430319825401734),
    (12.5, 0.14688405470042110231),
    (13.0, 0.206926102377067811),
    (13.5, 0.21498916588040081526),
    (14.0, 0.17107347611045865906),
    (14.5, 0.087544868010376222906),
    (15.0, -0.014224472826780773234),
    (15.5, -0.10923065090005016848),
    (16.0, -0.17489907398362918483),
    (16.5, -0.19638069293686102974),
    (17.0, -0.16985425215118354791),
    (17.5, -0.10311039822868592217),
    (18.0, -0.013355805721984110885),
    (18.5, 0.077164821422554699014),
    (19.0, 0.14662943965965120426),
    (19.5, 0.17885382704017289297),
    (19.999999, 0.16702473117362548906),
    (20.0, 0.16702466434058315473),
    (20.000001, 0.16702459750737713739),
    (20.5, 0.11509696025367476231),
    (21.0, 0.036579071000862743048),
    (21.5, -0.048942043721558056552),
    (22.0, -0.12065147570486718016),
    (22.5, -0.1615403170277827168),
    (23.0, -0.16241278131348654229),
    (23.5, -0.12392823156027444258),
    (24.0, -0.056230274166859267015),
    (24.5, 0.023697433734067902112),
    (25.0, 0.096266783275958116174),
    (25.5, 0.14406215754684786173),
    (26.0, 0.1559993155224211296),
    (26.5, 0.12987762611338541091),
    (27.0, 0.072741918005887087584),
    (27.5, -0.00099222890506740516315),
    (28.0, -0.073157010548999613902),
    (28.5, -0.12629113138046145368),
    (29.0, -0.14784876468298405046),
    (29.5, -0.133147858298398214),
    (30.0, -0.086367983581040211336),
    (30.5, -0.019389754517762152066),
    (30.634606468431976, 0.00000000000000012721932771376177227),
    (31.0, 0.0512081453045422488),
    (31.5, 0.10823892671147262171),
    (32.0, 0.13807900974655592376),
    (32.5, 0.13391127720843152004),
    (33.0, 0.097270672235509462797),
    (33.5, 0.037544440024352409253),
    (34.0, -0.030421191021792652072),
    (34.5, -0.090000654753103863582),
    (35.0, -0.12684568275631256981),
    (35.5, -0.13233156389133001175),
    (36.0, -0.10556738166868806221),
    (36.5, -0.053503642417614780957),
    (37.0, 0.010862369724899694741),
    (37.5, 0.071722705110602229323),
    (38.0, 0.11433273906115011657),
    (38.5, 0.12857568533078946594),
    (39.0, 0.11135769795486712329),
    (39.5, 0.067268098509753859673),
    (40.0, 0.0073668905842372895535),
    (40.5, -0.053582675632262946882),
    (41.0, -0.10074578912447979774),
    (41.5, -0.12282032421380177111),
    (42.0, -0.11473949671358282079),
    (42.5, -0.078827973695984583719),
    (43.0, -0.024149287584145487407),
    (43.5, 0.03577573717522485961),
    (44.0, 0.086306699332286579115),
    (44.5, 0.11525494892673104797),
    (45.0, 0.11581867067325632359),
    (45.5, 0.088176093155092095249),
    (46.0, 0.039364801024538844414),
    (46.5, -0.018504663747241874911),
    (47.0, -0.071248789901806190803),
    (47.5, -0.10608271415889353748),
    (48.0, -0.11471487832419725237),
    (48.5, -0.095316660747297569561),
    (49.0, -0.052900033322273515066),
    (49.5, 0.0019720993620572776198),
    (50.0, 0.055812327669251815005),
    (50.5, 0.095519891549700567084),
    (51.0, 0.11156465824468606822),
    (51.5, 0.10027099766670623132),
    (52.0, 0.064655027949674478223),
    (52.5, 0.013625701301503043378),
    (53.0, -0.040240188829877504255),
    (53.5, -0.083794269620892188084),
    (54.0, -0.10652270621574676357),
    (54.5, -0.10308119109579572141),
    (55.0, -0.074548302648236823007),
    (55.5, -0.0281040743011523956),
    (56.0, 0.024773655734196525985),
    (56.5, 0.071142818385739409581),
    (57.0, 0.099761814396506564972),
    (57.5, 0.10381219440226155956),
    (58.0, 0.082520532185846837941),
    (58.5, 0.041294317999118253682),
    (59.0, -0.0096483578142009464209),
    (59.5, -0.057808831474381268115),
    (60.0, -0.091471804089061869531),
    (60.5, -0.10255272478099083651),
    (61.0, -0.088537146301500447751),
    (61.5, -0.053047358803436275482),
    (62.0, -0.004909609587473566646),
    (62.5, 0.044038709482581475052),
    (63.0, 0.08185768644780927319),
    (63.5, 0.099415191891107884634),
    (64.0, 0.092590012216048114331),
    (64.5, 0.063236776899489306968),
    (65.0, 0.018687343227677949865),
    (65.5, -0.030078517787695293997),
    (66.0, -0.071137227836725282724),
    (66.5, -0.094534825565981312474),
    (67.0, -0.094698316049188762084),
    (67.5, -0.071761225791422536725),
    (68.0, -0.03148851718745771619),
    (68.5, 0.016170432171674173063),
    (69.0, 0.059538061551055416612),
    (69.5, 0.088068132306465354634),
    (70.0, 0.094908726483013542267),
    (70.5, 0.078546262938372995217),
    (71.0, 0.043136445732529065615),
    (71.5, -0.0025491716448353083345),
    (72.0, -0.047294465811741541264),
    (72.5, -0.080190787862034660942),
    (73.0, -0.093294907340684713856),
    (73.5, -0.08354560162634329071),
    (74.0, -0.053476777179108575747),
    (74.5, -0.010561492802361919939),
    (75.0, 0.034643913805097056137),
    (75.5, 0.071095060271513678505),
    (76.0, 0.089956437724970436182),
    (76.5, 0.086741792892345692522),
    (77.0, 0.062379777089647414219),
    (77.5, 0.0229520737645530248),
    (78.0, -0.021823491793559209793),
    (78.5, -0.060986850379741464957),
    (79.0, -0.08501719554953484564),
    (79.5, -0.088146348629108516397),
    (80.0, -0.06974216551221002284),
    (80.5, -0.034430475770058870911),
    (81.0, 0.0090662739661311191358),
    (81.5, 0.050082432666757896689),
    (82.0, 0.078623260549747048689),
    (82.5, 0.087799321553967429121),
    (83.0, 0.075488480401931363882),
    (83.5, 0.044824812903204060379),
    (84.0, 0.0034022635058601248215),
    (84.5, -0.038604976705940647799),
    (85.0, -0.07094039479627329546),
    (85.5, -0.085768363597797461897),
    (86.0, -0.079571947519217520674),
    (86.5, -0.05398588032729748624),
    (87.0, -0.015367712556540324942),
    (87.5, 0.026780927732998198426),
    (88.0, 0.062151161436612879711),
    (88.5, 0.082147290814206957583),
    (89.0, 0.081974845735968431977),
    (89.5, 0.061789232736980544514),
    (90.0, 0.026630016699969511323),
    (90.5, -0.014836323027090286074),
    (91.0, -0.052451745233414315013),
    (91.5, -0.07705418965772834194),
    (92.0, -0.082708365577566384848),
    (92.5, -0.06813683148442760958),
    (93.0, -0.037006503382771093334),
    (93.5, 0.0029931186702191920213),
    (94.0, 0.042048541022099481034),
    (94.5, 0.070629106079892631331),
    (95.0, 0.081811967783384143743),
    (95.5, 0.072958231132383056074),
    (96.0, 0.046334607451933622956),
    (96.5, 0.0085344014959858507875),
    (97.0, -0.031154578172777287126),
    (97.5, -0.063031365070669169638),
    (98.0, -0.079352257494671021832),
    (98.5, -0.076211285419172137235),
    (99.0, -0.05447423527049907344),
    (99.5, -0.019543066407440783557),
    (100.0, 0.019985850304223122424),
    (100.5, 0.05443657381441359099),
    (101.0, 0.075421398200297340203),
    (101.5, 0.077882361975138194294),
    (102.0, 0.061309726848217254177),
    (102.5, 0.029844043848657246763),
    (103.0, -0.0087576197216156301277),
    (103.5, -0.045033366363806678165),
    (104.0, -0.0701350976242033028),
    (104.5, -0.077986064483592914835),
    (105.0, -0.06675138166952049),
    (105.5, -0.039265793301155924425),
    (106.0, -0.002319234750451623911),
    (106.5, 0.035019951529194498174),
    (107.0, 0.063630205172503290666),
    (107.5, 0.076564470196492108159),
    (108.0, 0.070736522605957053079),
    (108.5, 0.047656692843593444346),
    (109.0, 0.013041759733724768927),
    (109.5, -0.024600528433820976806),
    (110.0, -0.056061967236294543145),
    (110.5, -0.073685899653461336398),
    (111.0, -0.073230081278947862663),
    (111.5, -0.054887294173378438399),
    (112.0, -0.023218295190201661378),
    (112.5, 0.013981635827021353929),
    (113.0, 0.047600992447503878824),
    (113.5, 0.069443243969322899828),
    (114.0, 0.074224697359058936556),
    (114.5, 0.060852167288988753872),
    (115.0, 0.032671608351445381667),
    (115.5, -0.0033685017347402702428),
    (116.0, -0.038429983806380164633),
    (116.5, -0.063951883010337976815),
    (117.0, -0.073740333406852573905),
    (117.5, -0.065471304403157899266),
    (118.0, -0.041241738756047247587),
    (118.5, -0.0070385406565670848108),
    (119.0, 0.02874029835643170357),
    (119.5, 0.057347235040884396707),
    (120.0, 0.071823415829156127576),
    (120.5, 0.068691061120123796947),
    (121.0, 0.048788505342269406363),
    (121.5, 0.017047506831604380551),
    (122.0, -0.018728397712040088273),
    (122.5, -0.049781984868994807768),
    (123.0, -0.068545521193546547737),
    (123.5, -0.07048462166325228854),
    (124.0, -0.055193633226308416883),
    (124.5, -0.026478023416310656228),
    (125.0, 0.0085922542033337803791),
    (125.5, 0.041423043043550811764),
    (126.0, 0.064001635366180066147),
    (126.5, 0.070851983832137365412),
    (127.0, 0.060362465171860360037),
    (127.5, 0.035164342256568918924),
    (128.0, 0.0014722223281851497517),
    (128.5, -0.03244829316656919639),
    (129.0, -0.058308020573477929461),
    (129.5, -0.069819468245683430135),
    (130.0, -0.064225230691877707287),
    (130.5, -0.04295805412039237314),
    (131.0, -0.011274672969473874938),
    (131.5, 0.023043187807641685225),
    (132.0, 0.051599732405983026649),
    (132.5, 0.067438765133615401127),
    (133.0, 0.066737854075294050776),
    (133.5, 0.049730455984968020038),
    (134.0, 0.020633631381934082669),
    (134.5, -0.013397255790565334641),
    (135.0, -0.044027834864834267146),
    (135.5, -0.063785540319664859306),
    (136.0, -0.067882291248475641536),
    (136.5, -0.055374532606132928973),
    (137.0, -0.029379659828202016294),
    (137.3, -0.0098786262816674415828),
    (137.5, 0.0037005847316428821523),
    (138.0, 0.035756366694678917124),
    (138.5, 0.058957629947295519437),
    (139.0, 0.06766639410655037824),
    (139.5, 0.059806520466878183439),
    (140.0, 0.037358225012042690662),
    (140.5, 0.0058596573664328265496),
    (141.0, -0.026959116365475687185),
    (141.5, -0.053072860793843617283),
    (142.0, -0.066123309624942214963),
    (142.5, -0.06296703012445879434),
    (143.0, -0.044432264390020334531),
    (143.5, -0.01510259891161019381),
    (144.0, 0.017816266092361941626),
    (144.5, 0.046266539573339057367),
    (145.0, 0.063310429528979522944),
    (145.5, 0.064821711274490854607),
    (146.0, 0.050484399706259573255),
    (146.5, 0.023856879750606386531),
    (147.0, -0.008510967170508459159),
    (147.5, -0.038688660327904282991),
    (148.0, -0.059307914406184373423),
    (148.5, -0.065361453370488800606),
    (149.0, -0.055418761342568097665),
    (149.5, -0.031963647752879660688),
    (150.0, -0.00077409037539429124695),
    (150.5, 0.030500883754422781803),
    (151.0, 0.054216823745808977039),
    (151.5, 0.064602123220642624084),
    (152.0, 0.0591623945342785714),
    (152.5, 0.039279284778503654036),
    (153.0, 0.0098600512742775801962),
    (153.5, -0.021873346026950963238),
    (154.0, -0.048156890347337452848),
    (154.5, -0.062583849471824862434),
    (155.0, -0.061666226435485301407),
    (155.5, -0.045677815289537195177),
    (156.0, -0.018575150671335966902),
    (156.5, 0.012981357295315104412),
    (157.0, 0.04126398373048112573),
    (157.5, 0.059369872127966712681),
    (158.0, 0.062905581275981692245),
    (158.5, 0.051052957117119869892),
    (159.0, 0.026757793731316667099),
    (159.5, -0.0040020515261559359606),
    (160.0, -0.033687312494909157302),
    (160.5, -0.055044983085636838052),
    (161.0, -0.062880239281048517707),
    (161.5, -0.05531978084857709106),
    (162.0, -0.034259404714138125247),
    (162.5, -0.0048889503148171983856),
    (163.0, 0.02558641992658867619),
    (163.5, 0.049713590961747930234),
    (164.0, 0.061614043466941317089),
    (164.5, 0.058415951816376899897),
    (165.0, 0.040946995803716196377),
    (165.5, 0.013520802559155717186),
    (166.0, -0.017128030455603490356),
    (166.5, -0.043497450105551866097),
    (167.0, -0.059154066722808697489),
    (167.5, -0.060302536610253979401),
    (168.0, -0.046705411603475334157),
    (168.5, -0.021730563376405978635),
    (169.0, 0.0084828067838505924305),
    (169.5, 0.036533099511513508432),
    (170.0, 0.055569359590786996855),
    (170.5, 0.060964364244658528379),
    (171.0, 0.051439211616949673088),
    (171.5, 0.02936613335420712816),
    (172.0, 0.00017792141309963120091),
    (172.5, -0.028969062278771857325),
    (173.0, -0.050949306713562333398),
    (173.5, -0.060409940441240124734),
    (174.0, -0.05507416008439531124),
    (174.5, -0.036288951960735849763),
    (175.0, -0.0086853963594555009961),
    (175.5, 0.020962860211491262993),
    (176.0, 0.045401626895335216941),
    (176.5, 0.058670921774476778511),
    (177.0, 0.057558300110430182258),
    (177.5, 0.0423764047166057431),
    (178.0, 0.016876578961564615146),
    (178.5, -0.012677901056058887736),
    (179.0, -0.039050057992120804261),
    (179.5, -0.055801164523659132364),
    (180.0, -0.058862596948708744127),
    (180.5, -0.047523899723843131367),
    (181.0, -0.024597146116951889996),
    (181.5, 0.0042802976793268679961),
    (182.0, 0.032031773298905213058),
    (182.5, 0.051875370826680049294),
    (183.0, 0.058981143456920158723),
    (183.5, 0.05164657874178257706),
    (184.0, 0.031704284501384587958),
    (184.5, 0.0040643208188310599436),
    (185.0, -0.024494580638589505156),
    (185.5, -0.046987361998264957634),
    (186.0, -0.057930928945293201978),
    (186.5, -0.054680635136226167929),
    (187.0, -0.038069231098373622979),
    (187.5, -0.012193946500155187464),
    (188.0, 0.016593958902828895933),
    (188.5, 0.041248015525199588642),
    (189.0, 0.055751180760443948455),
    (189.5, 0.056584218621272719281),
    (190.0, 0.04357951594026227108),
    (190.5, 0.019953220473579680928),
    (191.0, -0.0084899892888290071035),
    (191.5, -0.034782908163970656234),
    (192.0, -0.052502295822666004421),
    (192.5, -0.057337914617476939162),
    (193.0, -0.048140868522556147397),
    (193.5, -0.027196295868211383769),
    (194.0, 0.00034423987998027931448),
    (194.5, 0.027729712636821416866),
    (195.0, 0.048264386823018376275),
    (195.5, 0.056944794115193585642),
    (196.0, 0.051678756015407150071),
    (196.5, 0.033789484116489525349),
    (197.0, 0.007683337486326638243),
    (197.5, -0.020235399561808837795),
    (198.0, -0.043135474749424312527),
    (198.5, -0.055430038005814637919),
    (199.0, -0.054139528598386563971),
    (199.5, -0.039613637334785146078),
    (199.99, -0.015979717959609418327),
    (200.0, -0.015437439930565091592),
];
