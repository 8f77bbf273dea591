#include "bipan.h"
#include <stdio.h>
int main(void){ BipanDigraph *d=NULL; if(bipan_digraph_family("d8",0,false,&d)!=BIPAN_STATUS_OK) return 3;
 bool iso=false; unsigned m[8]; bipan_iso_d8(d,&iso,m); printf("order=%zu iso=%d\n", bipan_digraph_order(d), iso); bipan_digraph_free(d); return iso?0:1;}
