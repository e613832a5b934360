#include "flexsr/scenario.hpp"

namespace flexsr {

namespace {

// Five links chosen so that: algo 128 (no blue) routes R1->R2->R4, algo 129 (no red)
// leaves R1 on Gi0/0/0/1 towards R3, algo 131 has two TE-cost-3 paths to R4, and
// algo 130 moves onto R2->R4 once that direction drops to 10 us.
constexpr std::string_view kPaperScenario = R"(# Four routers in one OSPF area, SR-MPLS with FlexAlgo.
srgb: base = 16000
srgb: size = 8000

affinity: blue = 10
affinity: red = 20

node: R1 = 1.1.1.1
node: R2 = 2.2.2.2
node: R3 = 3.3.3.3
node: R4 = 4.4.4.4

link: R1-R2 = subnet 10.0.12.0/24 igp 1 te 1 delay 100 colors red
link: R1-R3 = subnet 10.0.13.0/24 igp 1 te 2 delay 100 colors blue
link: R2-R3 = subnet 10.0.23.0/24 igp 1 te 10 delay 100
link: R2-R4 = subnet 10.0.24.0/24 igp 1 te 2 delay 100 colors red
link: R3-R4 = subnet 10.0.34.0/24 igp 1 te 1 delay 100 colors blue

fad: 128 = metric igp calc 0 exclude-any blue
fad: 129 = metric igp calc 0 exclude-any red
fad: 130 = metric delay calc 0
fad: 131 = metric te-metric calc 0

vrf: GOLD = rd 1:1 color 10 ordinal 1
vrf: SILVER = rd 1:2 color 20 ordinal 2
vrf: BRONZE = rd 1:3 color 30 ordinal 3
vrf: PLATINUM = rd 1:4 color 40 ordinal 4
vrf: CUSTOM = rd 1:5 color 50 ordinal 5

attach: GOLD = R1 20.10.1.0/24 interface Gi0/0/0/5
attach: GOLD = R4 20.10.4.0/24 interface Gi0/0/0/5
attach: SILVER = R1 20.20.1.0/24 interface Gi0/0/0/6
attach: SILVER = R4 20.20.4.0/24 interface Gi0/0/0/6
attach: BRONZE = R1 20.30.1.0/24 interface Gi0/0/0/7
attach: BRONZE = R4 20.30.4.0/24 interface Gi0/0/0/7
attach: PLATINUM = R1 20.40.1.0/24 interface Gi0/0/0/8
attach: PLATINUM = R4 20.40.4.0/24 interface Gi0/0/0/8
# The load-balancing run sends PLATINUM traffic towards 20.30.4.0/24.
attach: PLATINUM = R4 20.30.4.0/24 interface Gi0/0/0/8
attach: CUSTOM = R1 20.50.1.0/24 interface Gi0/0/0/9
attach: CUSTOM = R4 20.50.4.0/24 interface Gi0/0/0/9

odn: 10 = 128
odn: 20 = 129
odn: 30 = 130
odn: 40 = 131
)";

}  // namespace

std::string_view paper_scenario_text() { return kPaperScenario; }

}  // namespace flexsr
