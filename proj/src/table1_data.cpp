#include "ftdesign/catalog.hpp"

namespace ftd::table1
{

std::array<std::string_view, 9> const generators = {
  "(1,4)(2,3)(5,8)(6,7)(9,13)(10,14)(11,15)(12,16)(17,22)(18,21)(19,24)(20,23)(25,31)(26,32)(27,29)(28,30)(33,40)(34,39)(35,38)(36,37)(57,61)(58,62)(59,63)(60,64)",
  "(1,3)(2,4)(5,7)(6,8)(17,23)(18,24)(19,21)(20,22)(25,31)(26,32)(27,29)(28,30)(33,40)(34,39)(35,38)(36,37)(41,44)(42,43)(45,48)(46,47)(49,50)(51,52)(53,54)(55,56)",
  "(1,9,33)(2,16,37)(3,12,40)(4,13,36)(5,11,38)(6,14,34)(7,10,35)(8,15,39)(19,21,23)(20,22,24)(27,31,29)(28,32,30)(41,49,57)(42,55,62)(43,56,63)(44,50,60)(45,53,58)(46,51,61)(47,52,64)(48,54,59)",
  "(1,57,2,61)(3,59,4,63)(5,64,6,60)(7,62,8,58)(9,51)(10,53)(11,50)(12,56)(13,54)(14,52)(15,55)(16,49)(17,31,19,29)(18,32,20,30)(21,27,23,25)(22,28,24,26)(33,46,37,41)(34,47,38,44)(35,45,39,42)(36,48,40,43)",
  "(1,4)(2,3)(5,8)(6,7)(17,24)(18,23)(19,22)(20,21)(33,37)(34,38)(35,39)(36,40)(41,44)(42,43)(45,48)(46,47)(49,51)(50,52)(53,55)(54,56)(57,60)(58,59)(61,64)(62,63)",
  "(2,4,3)(5,6,7)(9,25,41)(10,30,48)(11,32,42)(12,27,47)(13,31,44)(14,28,45)(15,26,43)(16,29,46)(18,24,21)(20,22,23)(33,49,57)(34,55,59)(35,53,62)(36,51,64)(37,52,60)(38,54,58)(39,56,63)(40,50,61)",
  "(17,20)(18,19)(21,24)(22,23)(25,29)(26,30)(27,31)(28,32)(33,40)(34,39)(35,38)(36,37)(41,46)(42,45)(43,48)(44,47)(49,52)(50,51)(53,56)(54,55)(57,64)(58,63)(59,62)(60,61)",
  "(1,4)(2,3)(5,8)(6,7)(17,20)(18,19)(21,24)(22,23)(25,32)(26,31)(27,30)(28,29)(41,42)(43,44)(45,46)(47,48)(49,54)(50,53)(51,56)(52,55)(57,58)(59,60)(61,62)(63,64)",
  "(1,4)(2,3)(5,8)(6,7)(9,12)(10,11)(13,16)(14,15)(25,31)(26,32)(27,29)(28,30)(33,37)(34,38)(35,39)(36,40)(41,46)(42,45)(43,48)(44,47)(49,50)(51,52)(53,54)(55,56)(57,64)(58,63)(59,62)(60,61)",
};

std::string_view const base_block_1 = "9,11,13,15,17,20,22,23,25,26,31,32,33,35,38,40,41,42,43,44,49,50,53,54,57,58,61,62";
std::string_view const base_block_2 = "10,12,14,16,18,19,21,24,27,28,29,30,34,36,37,39,45,46,47,48,51,52,55,56,59,60,63,64";

} // namespace ftd::table1
